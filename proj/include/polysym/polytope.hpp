#pragma once

#include "polysym/common.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polysym {

/// A full-dimensional convex polytope with the origin in its interior, given
/// by its vertices. Column i of `vertices` is v_i; vertex order is part of
/// every contract in this library (permutations, colorings and reports all
/// refer to these indices).
///
/// Only `make_polytope` and the loaders produce validated instances.
struct Polytope {
  std::string name;
  Matrix vertices;  // d x n

  int dim() const { return static_cast<int>(vertices.rows()); }
  int size() const { return static_cast<int>(vertices.cols()); }
  auto vertex(int i) const { return vertices.col(i); }

  /// Largest vertex norm; the length scale for geometric tolerances.
  double scale() const;
};

/// The facets of P, each written as <u_F, x> <= 1. The normals are the
/// vertices of the polar dual.
struct FacetSystem {
  Matrix normals;                              // d x m, column F is u_F
  std::vector<std::vector<int>> facet_vertices;  // sorted, per facet
  std::vector<std::vector<int>> vertex_facets;   // sorted, per vertex

  int size() const { return static_cast<int>(normals.cols()); }
  bool incident(int facet, int vertex) const;
  /// Facets containing both vertices.
  std::vector<int> common_facets(int a, int b) const;
};

/// Simple undirected graph on vertices 0..n-1 with a sorted edge list.
class EdgeGraph {
 public:
  EdgeGraph() = default;
  /// Throws Error(Validation) on loops, duplicates or out-of-range indices.
  EdgeGraph(int n, std::vector<Edge> edges);

  static EdgeGraph complete(int n);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool adjacent(int a, int b) const { return edge_index(a, b) >= 0; }
  /// Position of {a,b} in edges(), or -1.
  int edge_index(int a, int b) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool connected() const;

  friend bool operator==(const EdgeGraph& a, const EdgeGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> index_;  // n*n, edge position or -1
};

/// The (d-2)-face of the polar dual that corresponds to an edge of P.
struct DualFace {
  Edge edge;
  Matrix points;  // d x k, the normals of the facets containing the edge
  double relvol = 0.0;
};

/// Validates and returns a polytope. Throws Error(Validation) or
/// Error(DegenerateGeometry) naming the violated condition.
Polytope make_polytope(Matrix vertices, std::string name = {},
                       const Tolerances& tol = {});

/// Parses {"name"?, "dimension", "vertices"}; throws Error(Parse) on a
/// malformed document and validates the result like make_polytope. With
/// `recenter`, vertices are translated by minus their centroid first.
Polytope load_polytope(std::string_view json_text, const Tolerances& tol = {},
                       bool recenter = false);
Polytope load_polytope_file(const std::filesystem::path& path,
                            const Tolerances& tol = {}, bool recenter = false);

std::string polytope_to_json(const Polytope& p);

/// Brute force over d-subsets of vertices. Throws Error(Validation) if the
/// origin lies outside, Error(DegenerateGeometry) if a supporting hyperplane
/// passes within tolerance of the origin.
FacetSystem enumerate_facets(const Polytope& p, const Tolerances& tol = {});

/// {i,j} is an edge iff the smallest face containing both is the segment.
EdgeGraph edge_graph(const Polytope& p, const FacetSystem& facets);

/// Throws Error(DimensionMismatch) if the dual face is not (d-2)-dimensional.
DualFace dual_edge_face(const Polytope& p, const FacetSystem& facets, Edge edge,
                        const Tolerances& tol = {});

/// Dimension of the affine hull of the columns of `points`. Singular values
/// below rel_tol times the largest count as zero.
int affine_dimension(const Matrix& points, double rel_tol = 1e-9);

/// Volume of conv(points) measured inside its affine hull; 1 for a point.
double relative_volume(const Matrix& points, double rel_tol = 1e-9);

/// Volume of P°(c) = {x : <x, v_i> <= c_i}. Requires every c_i within
/// [1 - tol.trust, 1 + tol.trust]; throws Error(Unbounded) otherwise or if
/// the vertex enumeration does not yield a bounded full-dimensional body.
double volume_generalized_dual(const Polytope& p, const Vector& c,
                               const Tolerances& tol = {});

/// Vertices of P°(c), deduplicated, in enumeration order.
Matrix generalized_dual_vertices(const Polytope& p, const Vector& c,
                                 const Tolerances& tol = {});

}  // namespace polysym
