#include "polysym/autgroup.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace polysym {

namespace {

template <typename Key>
std::vector<int> dense_ranks(const std::vector<Key>& keys, int* distinct_count) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ids(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    ids[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  *distinct_count = static_cast<int>(sorted.size());
  return ids;
}

std::vector<int> individualize(const std::vector<int>& cells, int v) {
  std::vector<long> keys(cells.size());
  for (std::size_t u = 0; u < cells.size(); ++u)
    keys[u] = 2L * cells[u] + (static_cast<int>(u) == v ? 0 : 1);
  int count = 0;
  return dense_ranks(keys, &count);
}

std::vector<int> cell_sizes(const std::vector<int>& cells) {
  std::vector<int> sizes;
  for (int c : cells) {
    if (c >= static_cast<int>(sizes.size())) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  return sizes;
}

bool discrete(const std::vector<int>& cells) {
  return static_cast<int>(cell_sizes(cells).size()) == static_cast<int>(cells.size());
}

// First smallest non-singleton cell, lowest id on ties.
int target_cell(const std::vector<int>& cells) {
  const auto sizes = cell_sizes(cells);
  int best = -1;
  for (int c = 0; c < static_cast<int>(sizes.size()); ++c)
    if (sizes[c] > 1 && (best < 0 || sizes[c] < sizes[best])) best = c;
  return best;
}

class Search {
 public:
  Search(const LabeledGraph& lg, long limit) : lg_(lg), limit_(limit) {}

  std::vector<Permutation> run() {
    const int n = lg_.graph.order();
    path_.push_back(refine(lg_, lg_.coloring.vertex));
    while (!discrete(path_.back())) {
      const int cell = target_cell(path_.back());
      int v = 0;
      while (path_.back()[v] != cell) ++v;
      targets_.push_back(cell);
      path_.push_back(refine(lg_, individualize(path_.back(), v)));
    }
    found_.clear();
    if (n > 0) descend(0, path_.front());
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void descend(std::size_t depth, const std::vector<int>& right) {
    if (depth == targets_.size()) {
      const auto& left = path_.back();
      std::vector<int> vertex_of(right.size());
      for (std::size_t y = 0; y < right.size(); ++y) vertex_of[right[y]] = static_cast<int>(y);
      std::vector<int> image(left.size());
      for (std::size_t x = 0; x < left.size(); ++x) image[x] = vertex_of[left[x]];
      Permutation sigma(std::move(image));
      if (is_automorphism(lg_, sigma)) {
        found_.push_back(std::move(sigma));
        if (static_cast<long>(found_.size()) > limit_)
          throw Error(ErrorKind::LimitExceeded,
                      "automorphism group larger than limit " + std::to_string(limit_));
      }
      return;
    }
    const auto expected = cell_sizes(path_[depth + 1]);
    for (int w = 0; w < static_cast<int>(right.size()); ++w) {
      if (right[w] != targets_[depth]) continue;
      auto next = refine(lg_, individualize(right, w));
      if (cell_sizes(next) == expected) descend(depth + 1, next);
    }
  }

  const LabeledGraph& lg_;
  long limit_;
  std::vector<std::vector<int>> path_;  // left branch, first cell vertex individualized
  std::vector<int> targets_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<int> refine(const LabeledGraph& lg, std::vector<int> cells) {
  const auto& g = lg.graph;
  int count = 0;
  cells = dense_ranks(cells, &count);
  while (true) {
    std::vector<std::vector<int>> sig(g.order());
    for (int v = 0; v < g.order(); ++v) {
      std::vector<std::pair<int, int>> around;
      for (int w : g.neighbors(v)) around.emplace_back(lg.coloring.edge[g.edge_index(v, w)], cells[w]);
      std::sort(around.begin(), around.end());
      sig[v].push_back(cells[v]);
      for (const auto& [c, k] : around) {
        sig[v].push_back(c);
        sig[v].push_back(k);
      }
    }
    int next_count = 0;
    auto next = dense_ranks(sig, &next_count);
    if (next_count == count) return next;
    cells = std::move(next);
    count = next_count;
  }
}

std::vector<int> color_refinement(const LabeledGraph& lg) { return refine(lg, lg.coloring.vertex); }

bool is_automorphism(const LabeledGraph& lg, const Permutation& sigma) {
  const auto& g = lg.graph;
  if (sigma.size() != g.order()) return false;
  for (int i = 0; i < g.order(); ++i)
    if (lg.coloring.vertex[sigma(i)] != lg.coloring.vertex[i]) return false;
  for (int k = 0; k < g.edge_count(); ++k) {
    const auto [i, j] = g.edges()[k];
    const int image = g.edge_index(sigma(i), sigma(j));
    if (image < 0 || lg.coloring.edge[image] != lg.coloring.edge[k]) return false;
  }
  return true;
}

PermutationSet automorphisms(const LabeledGraph& lg, long limit, const Tolerances& tol) {
  if (lg.graph.order() > tol.max_vertices)
    throw Error(ErrorKind::LimitExceeded, "graph has more than " +
                                              std::to_string(tol.max_vertices) + " vertices");
  Search search(lg, limit);
  auto found = search.run();
  if (found.empty()) found.push_back(Permutation::identity(lg.graph.order()));
  return PermutationSet(std::move(found));
}

PermutationSet automorphisms(const LabeledGraph& lg, const Tolerances& tol) {
  return automorphisms(lg, tol.group_limit, tol);
}

PermutationSet automorphisms(const EdgeGraph& g, const Tolerances& tol) {
  return automorphisms(LabeledGraph(g, constant_coloring(g)), tol);
}

Orbits orbits(const PermutationSet& group, const EdgeGraph& g) {
  Orbits out;
  std::vector<char> seen(g.order(), 0);
  for (int i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    std::set<int> orbit;
    for (const auto& s : group) orbit.insert(s(i));
    for (int x : orbit) seen[x] = 1;
    out.vertices.emplace_back(orbit.begin(), orbit.end());
  }
  std::vector<char> eseen(g.edge_count(), 0);
  for (int k = 0; k < g.edge_count(); ++k) {
    if (eseen[k]) continue;
    std::set<Edge> orbit;
    const auto [i, j] = g.edges()[k];
    for (const auto& s : group) orbit.insert(make_edge(s(i), s(j)));
    for (const auto& e : orbit) {
      const int idx = g.edge_index(e.first, e.second);
      if (idx >= 0) eseen[idx] = 1;
    }
    out.edges.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

}  // namespace polysym
