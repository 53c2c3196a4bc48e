#pragma once

#include "polysym/izmestiev.hpp"
#include "polysym/permutation.hpp"
#include "polysym/polytope.hpp"

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polysym {

/// Discrete colors on the vertices and edges of a graph. Vertex and edge
/// colors live in separate dense ranges (0..k-1 each) and are never compared
/// with each other. `edge` is aligned with EdgeGraph::edges().
///
/// Representatives record the real value(s) each class was built from; a
/// product coloring concatenates the factors' representatives.
struct Coloring {
  std::vector<int> vertex;
  std::vector<int> edge;
  std::vector<std::vector<double>> vertex_reps;
  std::vector<std::vector<double>> edge_reps;
  // Smallest gap between adjacent classes at quantization time (infinity if
  // there is at most one class or the coloring was not quantized).
  double vertex_gap = std::numeric_limits<double>::infinity();
  double edge_gap = std::numeric_limits<double>::infinity();

  int vertex_classes() const { return static_cast<int>(vertex_reps.size()); }
  int edge_classes() const { return static_cast<int>(edge_reps.size()); }

  /// Vertex indices per class, classes in id order.
  std::vector<std::vector<int>> vertex_partition() const;
  std::vector<std::vector<Edge>> edge_partition(const EdgeGraph& g) const;
};

/// A graph together with a coloring of its vertices and edges.
struct LabeledGraph {
  EdgeGraph graph;
  Coloring coloring;

  /// Throws Error(DomainMismatch) if the coloring does not cover the graph.
  LabeledGraph(EdgeGraph g, Coloring c);

  /// Integer colored adjacency matrix: vertex class + 1 on the diagonal,
  /// (vertex classes + 1 + edge class) on edges, 0 elsewhere.
  Eigen::MatrixXi colored_adjacency() const;
};

/// Gap-rule quantization: sort, start a new class wherever consecutive
/// values differ by more than eps * max(1, max|value|). Vertices and edges
/// are quantized independently; classes are numbered by ascending value.
Coloring quantize(std::span<const double> vertex_values, std::span<const double> edge_values,
                  double eps);

/// m(i) = |v_i|^2, m(ij) = <v_i, v_j>.
Coloring metric_coloring(const Polytope& p, const EdgeGraph& g, const Tolerances& tol = {});

/// I(i) = M_ii, I(ij) = M_ij.
Coloring izmestiev_coloring(const IzmestievMatrix& m, const Tolerances& tol = {});

/// Pairs of colors, renumbered densely in lexicographic order of the pairs.
/// Throws Error(DomainMismatch) if the factors color different domains.
Coloring product_coloring(const Coloring& a, const Coloring& b);

/// Colors every vertex and edge the same.
Coloring constant_coloring(const EdgeGraph& g);

enum class CompleteVariant { Orthogonal, Linear };

/// K_n colored by Phi^T Phi (orthogonal) or Phi^+ Phi (linear): diagonal
/// entries color vertices, off-diagonal entries color all pairs.
LabeledGraph complete_metric(const Polytope& p, CompleteVariant variant,
                             const Tolerances& tol = {});

/// Colors are the orbits of `group` on vertices and on edges. Throws
/// Error(NotAGroup) if some element is not an automorphism of `g`.
Coloring orbit_coloring(const EdgeGraph& g, const PermutationSet& group);

/// True iff every class of `a` lies inside a class of `b`, on vertices and
/// on edges. Throws Error(DomainMismatch) on incompatible domains.
bool is_finer(const Coloring& a, const Coloring& b);

/// Graphviz rendering; class ids map to a fixed palette.
std::string to_dot(const LabeledGraph& lg, std::string_view name = "G");

}  // namespace polysym
