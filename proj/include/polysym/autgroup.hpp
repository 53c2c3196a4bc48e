#pragma once

#include "polysym/coloring.hpp"
#include "polysym/permutation.hpp"

#include <vector>

namespace polysym {

/// Stable vertex partition of 1-dimensional Weisfeiler-Leman refinement with
/// edge colors, starting from the vertex coloring. Cell ids are canonical:
/// they depend only on the isomorphism type of (graph, coloring, vertex).
std::vector<int> color_refinement(const LabeledGraph& lg);

/// Refines an arbitrary initial cell assignment (ids need not be dense).
std::vector<int> refine(const LabeledGraph& lg, std::vector<int> cells);

/// True iff sigma preserves adjacency, vertex colors and edge colors.
bool is_automorphism(const LabeledGraph& lg, const Permutation& sigma);

/// Every color-preserving automorphism, by individualization-refinement
/// backtracking. Each candidate is verified before it is kept; the result
/// is sorted.
///
/// Throws Error(LimitExceeded) if the graph has more than tol.max_vertices
/// vertices or the group more than `limit` elements.
PermutationSet automorphisms(const LabeledGraph& lg, long limit, const Tolerances& tol = {});
PermutationSet automorphisms(const LabeledGraph& lg, const Tolerances& tol = {});

/// Uncolored graph automorphisms.
PermutationSet automorphisms(const EdgeGraph& g, const Tolerances& tol = {});

struct Orbits {
  std::vector<std::vector<int>> vertices;
  std::vector<std::vector<Edge>> edges;
};

/// Orbits on V and on E, each orbit sorted, orbits ordered by first member.
Orbits orbits(const PermutationSet& group, const EdgeGraph& g);

}  // namespace polysym
