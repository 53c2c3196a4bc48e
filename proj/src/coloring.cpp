#include "polysym/coloring.hpp"

#include "polysym/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace polysym {

namespace {

struct Quantized {
  std::vector<int> ids;
  std::vector<std::vector<double>> reps;
  double gap = std::numeric_limits<double>::infinity();
};

Quantized quantize_values(std::span<const double> values, double eps) {
  Quantized q;
  q.ids.assign(values.size(), 0);
  if (values.empty()) return q;
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  double max_abs = 0.0;
  for (double v : values) max_abs = std::max(max_abs, std::abs(v));
  const double threshold = eps * std::max(1.0, max_abs);

  int id = 0;
  q.reps.push_back({values[order[0]]});
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) {
      const double gap = values[order[k]] - values[order[k - 1]];
      if (gap > threshold) {
        ++id;
        q.reps.push_back({values[order[k]]});
        q.gap = std::min(q.gap, gap);
      }
    }
    q.ids[order[k]] = id;
  }
  return q;
}

// Renumbers arbitrary keys densely in sorted key order.
template <typename Key>
std::vector<int> densify(const std::vector<Key>& keys, std::vector<Key>* distinct = nullptr) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ids(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    ids[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  if (distinct) *distinct = std::move(sorted);
  return ids;
}

void check_partition(const std::vector<int>& fine, const std::vector<int>& coarse, bool& ok) {
  std::map<int, int> image;
  for (std::size_t i = 0; i < fine.size() && ok; ++i) {
    auto [it, inserted] = image.emplace(fine[i], coarse[i]);
    if (!inserted && it->second != coarse[i]) ok = false;
  }
}

}  // namespace

std::vector<std::vector<int>> Coloring::vertex_partition() const {
  std::vector<std::vector<int>> classes(vertex_classes());
  for (std::size_t i = 0; i < vertex.size(); ++i) classes[vertex[i]].push_back(static_cast<int>(i));
  return classes;
}

std::vector<std::vector<Edge>> Coloring::edge_partition(const EdgeGraph& g) const {
  std::vector<std::vector<Edge>> classes(edge_classes());
  for (std::size_t k = 0; k < edge.size(); ++k) classes[edge[k]].push_back(g.edges()[k]);
  return classes;
}

LabeledGraph::LabeledGraph(EdgeGraph g, Coloring c) : graph(std::move(g)), coloring(std::move(c)) {
  if (static_cast<int>(coloring.vertex.size()) != graph.order() ||
      static_cast<int>(coloring.edge.size()) != graph.edge_count())
    throw Error(ErrorKind::DomainMismatch, "coloring does not match graph");
}

Eigen::MatrixXi LabeledGraph::colored_adjacency() const {
  const int n = graph.order();
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = coloring.vertex[i] + 1;
  const int offset = coloring.vertex_classes() + 1;
  for (int k = 0; k < graph.edge_count(); ++k) {
    auto [i, j] = graph.edges()[k];
    a(i, j) = a(j, i) = offset + coloring.edge[k];
  }
  return a;
}

Coloring quantize(std::span<const double> vertex_values, std::span<const double> edge_values,
                  double eps) {
  Quantized v = quantize_values(vertex_values, eps);
  Quantized e = quantize_values(edge_values, eps);
  return {std::move(v.ids), std::move(e.ids), std::move(v.reps), std::move(e.reps), v.gap, e.gap};
}

Coloring metric_coloring(const Polytope& p, const EdgeGraph& g, const Tolerances& tol) {
  std::vector<double> vv(p.size()), ev;
  for (int i = 0; i < p.size(); ++i) vv[i] = p.vertex(i).squaredNorm();
  for (const auto& [i, j] : g.edges()) ev.push_back(p.vertex(i).dot(p.vertex(j)));
  return quantize(vv, ev, tol.color);
}

Coloring izmestiev_coloring(const IzmestievMatrix& m, const Tolerances& tol) {
  std::vector<double> vv(m.size()), ev;
  for (int i = 0; i < m.size(); ++i) vv[i] = m.entries(i, i);
  for (const auto& [i, j] : m.graph.edges()) ev.push_back(m.entries(i, j));
  return quantize(vv, ev, tol.color);
}

Coloring product_coloring(const Coloring& a, const Coloring& b) {
  if (a.vertex.size() != b.vertex.size() || a.edge.size() != b.edge.size())
    throw Error(ErrorKind::DomainMismatch, "product of colorings on different graphs");
  auto combine = [](const std::vector<int>& x, const std::vector<int>& y,
                    const std::vector<std::vector<double>>& xr,
                    const std::vector<std::vector<double>>& yr, std::vector<int>& ids,
                    std::vector<std::vector<double>>& reps) {
    std::vector<std::pair<int, int>> keys(x.size()), distinct;
    for (std::size_t i = 0; i < x.size(); ++i) keys[i] = {x[i], y[i]};
    ids = densify(keys, &distinct);
    reps.clear();
    for (const auto& [s, t] : distinct) {
      std::vector<double> r = xr.at(s);
      r.insert(r.end(), yr.at(t).begin(), yr.at(t).end());
      reps.push_back(std::move(r));
    }
  };
  Coloring c;
  combine(a.vertex, b.vertex, a.vertex_reps, b.vertex_reps, c.vertex, c.vertex_reps);
  combine(a.edge, b.edge, a.edge_reps, b.edge_reps, c.edge, c.edge_reps);
  c.vertex_gap = std::min(a.vertex_gap, b.vertex_gap);
  c.edge_gap = std::min(a.edge_gap, b.edge_gap);
  return c;
}

Coloring constant_coloring(const EdgeGraph& g) {
  Coloring c;
  c.vertex.assign(g.order(), 0);
  c.edge.assign(g.edge_count(), 0);
  if (g.order() > 0) c.vertex_reps = {{0.0}};
  if (g.edge_count() > 0) c.edge_reps = {{0.0}};
  return c;
}

LabeledGraph complete_metric(const Polytope& p, CompleteVariant variant, const Tolerances& tol) {
  const Matrix gram = variant == CompleteVariant::Orthogonal
                          ? Matrix(p.vertices.transpose() * p.vertices)
                          : Matrix(pseudo_inverse(p.vertices) * p.vertices);
  EdgeGraph kn = EdgeGraph::complete(p.size());
  std::vector<double> vv(p.size()), ev;
  for (int i = 0; i < p.size(); ++i) vv[i] = gram(i, i);
  for (const auto& [i, j] : kn.edges()) ev.push_back(gram(i, j));
  return LabeledGraph(std::move(kn), quantize(vv, ev, tol.color));
}

Coloring orbit_coloring(const EdgeGraph& g, const PermutationSet& group) {
  if (group.degree() != g.order())
    throw Error(ErrorKind::DomainMismatch, "group degree differs from graph order");
  for (const auto& s : group)
    for (const auto& [i, j] : g.edges())
      if (!g.adjacent(s(i), s(j)))
        throw Error(ErrorKind::NotAGroup, "group is not a subgroup of Aut(G)");

  // Orbit id = smallest member; classes numbered by that member.
  std::vector<int> vmin(g.order());
  for (int i = 0; i < g.order(); ++i) {
    vmin[i] = i;
    for (const auto& s : group) vmin[i] = std::min(vmin[i], s(i));
  }
  std::vector<int> emin(g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    emin[k] = k;
    auto [i, j] = g.edges()[k];
    for (const auto& s : group) emin[k] = std::min(emin[k], g.edge_index(s(i), s(j)));
  }
  Coloring c;
  std::vector<int> vreps, ereps;
  c.vertex = densify(vmin, &vreps);
  c.edge = densify(emin, &ereps);
  for (int r : vreps) c.vertex_reps.push_back({static_cast<double>(r)});
  for (int r : ereps) c.edge_reps.push_back({static_cast<double>(r)});
  return c;
}

bool is_finer(const Coloring& a, const Coloring& b) {
  if (a.vertex.size() != b.vertex.size() || a.edge.size() != b.edge.size())
    throw Error(ErrorKind::DomainMismatch, "colorings on different graphs");
  bool ok = true;
  check_partition(a.vertex, b.vertex, ok);
  check_partition(a.edge, b.edge, ok);
  return ok;
}

std::string to_dot(const LabeledGraph& lg, std::string_view name) {
  static constexpr const char* palette[] = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
  };
  constexpr int size = sizeof(palette) / sizeof(palette[0]);
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n  node [style=filled];\n";
  for (int i = 0; i < lg.graph.order(); ++i) {
    const int c = lg.coloring.vertex[i];
    os << "  " << i << " [label=\"" << i << "\", fillcolor=\"" << palette[c % size]
       << "\", class=" << c << "];\n";
  }
  for (int k = 0; k < lg.graph.edge_count(); ++k) {
    const auto [i, j] = lg.graph.edges()[k];
    const int c = lg.coloring.edge[k];
    os << "  " << i << " -- " << j << " [color=\"" << palette[c % size] << "\", class=" << c
       << ", penwidth=2];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace polysym
