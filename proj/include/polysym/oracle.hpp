#pragma once

#include "polysym/reconstruct.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polysym {

/// Any graph with coordinates for its vertices; no convexity or interior
/// requirements.
struct Embedding {
  std::string name;
  EdgeGraph graph;
  Matrix coordinates;  // d x n
};

/// Same document schema as polytopes plus an optional "edges": [[i,j],...].
/// Only parse-level checks are applied.
Embedding load_embedding(std::string_view json_text);
Embedding load_embedding_file(const std::filesystem::path& path);

/// Largest n for which all of Sym(V) may be scanned.
inline constexpr int kMaxSymmetricDegree = 9;

/// Definition-level ground truth: every sigma in Sym(V) whose unique
/// candidate T = Phi Pi_sigma Phi^+ maps v_j to v_sigma(j) (and is
/// orthogonal for Flavor::Orthogonal). Scans candidates in parallel and
/// merges in lexicographic order. Throws Error(TooManyCandidates) for
/// n > kMaxSymmetricDegree.
MatrixGroup brute_force_group(const Matrix& phi, Flavor flavor, const Tolerances& tol = {});

/// Serial reference for brute_force_group; identical output.
MatrixGroup brute_force_group_serial(const Matrix& phi, Flavor flavor, const Tolerances& tol = {});

/// Same filter over an explicit candidate list.
MatrixGroup brute_force_group(const Matrix& phi, const PermutationSet& candidates, Flavor flavor,
                              const Tolerances& tol = {});

enum class CandidateSource { Symmetric, GraphAutomorphisms };

/// Geometric symmetries of an embedding. Coordinates that do not span R^d
/// are first expressed in an orthonormal basis of their span, so matrices
/// act on that span.
MatrixGroup embedding_group(const Embedding& e, CandidateSource source, Flavor flavor,
                            const Tolerances& tol = {});
MatrixGroup embedding_group(const Embedding& e, const PermutationSet& candidates, Flavor flavor,
                            const Tolerances& tol = {});

struct ComparisonReport {
  bool equal = false;           // identical permutation sets
  bool matrices_agree = false;  // shared sigma have matrices within eps
  double max_matrix_diff = 0.0;
  long order_a = 0;
  long order_b = 0;
  std::vector<Permutation> only_in_a;
  std::vector<Permutation> only_in_b;
};

ComparisonReport compare_groups(const MatrixGroup& a, const MatrixGroup& b, double eps = 1e-8);

/// Permutation-set part of compare_groups; matrices are not involved.
ComparisonReport compare_permutations(const PermutationSet& a, const PermutationSet& b);

}  // namespace polysym
