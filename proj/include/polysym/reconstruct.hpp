#pragma once

#include "polysym/autgroup.hpp"
#include "polysym/coloring.hpp"
#include "polysym/izmestiev.hpp"
#include "polysym/permutation.hpp"
#include "polysym/polytope.hpp"

#include <string_view>
#include <vector>

namespace polysym {

/// Phi^+ = Phi^T (Phi Phi^T)^-1, the right inverse of a full-row-rank d x n
/// matrix. Throws Error(RankDeficient) otherwise.
Matrix pseudo_inverse(const Matrix& phi);

/// T_sigma = Phi Pi_sigma Phi^+ (d x d).
Matrix linear_map_from_perm(const Matrix& phi, const Matrix& phi_pinv, const Permutation& sigma);
Matrix linear_map_from_perm(const Matrix& phi, const Permutation& sigma);

/// ||T v_j - v_sigma(j)|| <= eps * ||v_sigma(j)|| for every column j.
bool check_realizes(const Matrix& t, const Permutation& sigma, const Matrix& phi, double eps);

/// Largest relative column mismatch ||T v_j - v_sigma(j)|| / ||v_sigma(j)||.
double realization_error(const Matrix& t, const Permutation& sigma, const Matrix& phi);

/// ||T^T T - I||_max <= eps.
bool check_orthogonal(const Matrix& t, double eps);

struct EigenspaceCheck {
  bool holds = false;
  double eigenvalue = 0.0;  // least-squares lambda over all columns
  double residual = 0.0;    // ||A Phi^T - lambda Phi^T||_max, relative
  int multiplicity = 0;     // eigenvalues of A within tolerance of lambda
};

/// Whether span(Phi^T) = span(Phi^+) is an eigenspace of A: every column of
/// Phi^T is an eigenvector for one common eigenvalue.
EigenspaceCheck eigenspace_criterion(const Matrix& a, const Matrix& phi, double eps = 1e-8);

enum class Flavor { Linear, Orthogonal };

std::string_view to_string(Flavor f);

struct GroupElement {
  Permutation perm;
  Matrix matrix;
  bool orthogonal = false;
};

/// Symmetries as (sigma, T_sigma) pairs, sorted by permutation.
struct MatrixGroup {
  Flavor flavor = Flavor::Linear;
  std::vector<GroupElement> elements;

  long order() const { return static_cast<long>(elements.size()); }
  /// Throws Error(NotAGroup) if the permutations are not closed.
  PermutationSet permutations() const;
};

/// Everything the symmetry pipelines derive from the vertex coordinates.
struct PolytopeStructure {
  Polytope polytope;
  FacetSystem facets;
  EdgeGraph graph;
  IzmestievMatrix izmestiev;
  Coloring izmestiev_coloring;
  Coloring metric_coloring;
  Coloring product_coloring;  // izmestiev x metric
};

PolytopeStructure analyze_structure(const Polytope& p, const Tolerances& tol = {});

/// Maps each automorphism to T_sigma and requires it to realize sigma (and
/// to be orthogonal for Flavor::Orthogonal). Any failure, or a non-closed
/// permutation set, throws Error(TheoremViolation) with the offending data.
MatrixGroup realize_group(const Polytope& p, const PermutationSet& auts, Flavor flavor,
                          const Tolerances& tol = {});

/// Aut of the Izmestiev-colored edge-graph, realized as linear maps.
MatrixGroup linear_group(const PolytopeStructure& s, const Tolerances& tol = {});
MatrixGroup linear_group(const Polytope& p, const Tolerances& tol = {});

/// Aut of the (Izmestiev x metric)-colored edge-graph, realized as
/// orthogonal maps.
MatrixGroup orthogonal_group(const PolytopeStructure& s, const Tolerances& tol = {});
MatrixGroup orthogonal_group(const Polytope& p, const Tolerances& tol = {});

}  // namespace polysym
