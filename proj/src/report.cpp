#include "polysym/report.hpp"

#include <chrono>
#include <cmath>

namespace polysym {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double number_from(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
  return out;
}

Vector vector_from_json(const Json& j) {
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = number_from(j[i]);
  return v;
}

Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return out;
}

std::vector<Edge> edges_from_json(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

Json reps_to_json(const std::vector<std::vector<double>>& reps) {
  Json out = Json::array();
  for (const auto& r : reps) {
    Json row = Json::array();
    for (double x : r) row.push_back(number(x));
    out.push_back(row);
  }
  return out;
}

std::vector<std::vector<double>> reps_from_json(const Json& j) {
  std::vector<std::vector<double>> out;
  for (const auto& row : j) {
    std::vector<double> r;
    for (const auto& x : row) r.push_back(number_from(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(number(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
      throw Error(ErrorKind::Parse, "matrix rows have different lengths");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& x = j[i][k];
      if (!x.is_number() && !x.is_null()) throw Error(ErrorKind::Parse, "non-numeric matrix entry");
      m(i, k) = x.is_null() ? std::numeric_limits<double>::quiet_NaN() : x.get<double>();
    }
  }
  return m;
}

Json matrix_dump(const Matrix& m) { return {{"n", m.rows()}, {"entries", matrix_to_json(m)}}; }

Matrix matrix_from_dump(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("entries"))
    throw Error(ErrorKind::Parse, "matrix dump needs \"n\" and \"entries\"");
  Matrix m = matrix_from_json(j["entries"]);
  const long n = j["n"].get<long>();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::Parse, "matrix dump is not n x n");
  return m;
}

Json tolerances_to_json(const Tolerances& t) {
  return {{"geom", t.geom},       {"color", t.color},       {"kern", t.kern},
          {"eig", t.eig},         {"match", t.match},       {"orth", t.orth},
          {"fd_step", t.fd_step}, {"fd_agree", t.fd_agree}, {"trust", t.trust},
          {"max_vertices", t.max_vertices}, {"group_limit", t.group_limit}};
}

Tolerances tolerances_from_json(const Json& j) {
  Tolerances t;
  for (const auto& [key, value] : j.items()) t.set(key, value.get<double>());
  return t;
}

Json coloring_to_json(const Coloring& c, const EdgeGraph& g) {
  Json edge_classes = Json::array();
  for (const auto& cls : c.edge_partition(g)) edge_classes.push_back(edges_to_json(cls));
  return {{"vertex_classes", c.vertex_partition()},
          {"edge_classes", edge_classes},
          {"representatives",
           {{"vertex", reps_to_json(c.vertex_reps)},
            {"edge", reps_to_json(c.edge_reps)},
            {"vertex_gap", number(c.vertex_gap)},
            {"edge_gap", number(c.edge_gap)}}}};
}

Coloring coloring_from_json(const Json& j, const EdgeGraph& g) {
  Coloring c;
  c.vertex.assign(g.order(), -1);
  c.edge.assign(g.edge_count(), -1);
  const auto& vc = j.at("vertex_classes");
  for (std::size_t k = 0; k < vc.size(); ++k)
    for (const auto& v : vc[k]) c.vertex.at(v.get<int>()) = static_cast<int>(k);
  const auto& ec = j.at("edge_classes");
  for (std::size_t k = 0; k < ec.size(); ++k)
    for (const auto& [a, b] : edges_from_json(ec[k])) {
      const int idx = g.edge_index(a, b);
      if (idx < 0) throw Error(ErrorKind::Parse, "coloring names a non-edge");
      c.edge[idx] = static_cast<int>(k);
    }
  const auto& reps = j.at("representatives");
  c.vertex_reps = reps_from_json(reps.at("vertex"));
  c.edge_reps = reps_from_json(reps.at("edge"));
  c.vertex_gap = number_from(reps.at("vertex_gap"));
  c.edge_gap = number_from(reps.at("edge_gap"));
  return c;
}

Json group_to_json(const MatrixGroup& g, const Tolerances& tol) {
  Json elements = Json::array();
  for (const auto& e : g.elements)
    elements.push_back({{"perm", e.perm.image()},
                        {"matrix", matrix_to_json(e.matrix)},
                        {"orthogonal", e.orthogonal}});
  return {{"flavor", std::string(to_string(g.flavor))},
          {"order", g.order()},
          {"tolerances", {{"match", tol.match}, {"orth", tol.orth}}},
          {"elements", elements}};
}

MatrixGroup group_from_json(const Json& j) {
  MatrixGroup g;
  g.flavor = j.at("flavor").get<std::string>() == "orthogonal" ? Flavor::Orthogonal : Flavor::Linear;
  for (const auto& e : j.at("elements"))
    g.elements.push_back({Permutation(e.at("perm").get<std::vector<int>>()),
                          matrix_from_json(e.at("matrix")), e.at("orthogonal").get<bool>()});
  return g;
}

Json properties_to_json(const IzmestievPropertyReport& r) {
  return {{"pass", r.pass()},
          {"symmetric", r.symmetric},
          {"sign_on_edges", r.sign_ok},
          {"zero_on_non_edges", r.sparsity_ok},
          {"negative_eigenvalues", r.negative_count},
          {"unique_negative", r.unique_negative},
          {"kernel_residual", number(r.kernel_residual)},
          {"kernel_ok", r.kernel_ok},
          {"kernel_dim", r.kernel_dim},
          {"kernel_dim_ok", r.kernel_dim_ok},
          {"eps_eig", number(r.eps_eig)},
          {"spectrum", vector_to_json(r.spectrum)}};
}

IzmestievPropertyReport properties_from_json(const Json& j) {
  IzmestievPropertyReport r;
  r.symmetric = j.at("symmetric").get<bool>();
  r.sign_ok = j.at("sign_on_edges").get<bool>();
  r.sparsity_ok = j.at("zero_on_non_edges").get<bool>();
  r.negative_count = j.at("negative_eigenvalues").get<int>();
  r.unique_negative = j.at("unique_negative").get<bool>();
  r.kernel_residual = number_from(j.at("kernel_residual"));
  r.kernel_ok = j.at("kernel_ok").get<bool>();
  r.kernel_dim = j.at("kernel_dim").get<int>();
  r.kernel_dim_ok = j.at("kernel_dim_ok").get<bool>();
  r.eps_eig = number_from(j.at("eps_eig"));
  r.spectrum = vector_from_json(j.at("spectrum"));
  return r;
}

Json eigenspace_to_json(const EigenspaceCheck& e) {
  return {{"holds", e.holds},
          {"eigenvalue", number(e.eigenvalue)},
          {"residual", number(e.residual)},
          {"multiplicity", e.multiplicity}};
}

Json comparison_to_json(const ComparisonReport& r) {
  Json only_a = Json::array(), only_b = Json::array();
  for (const auto& p : r.only_in_a) only_a.push_back(p.image());
  for (const auto& p : r.only_in_b) only_b.push_back(p.image());
  return {{"equal", r.equal},
          {"matrices_agree", r.matrices_agree},
          {"max_matrix_diff", number(r.max_matrix_diff)},
          {"order_a", r.order_a},
          {"order_b", r.order_b},
          {"only_in_a", only_a},
          {"only_in_b", only_b}};
}

const std::vector<std::string>& coloring_names() {
  static const std::vector<std::string> names{"metric", "izmestiev", "product", "orbit-linear",
                                              "orbit-orthogonal"};
  return names;
}

Json AnalysisReport::to_json() const {
  Json colors = Json::object();
  for (const auto& [name, c] : colorings) colors[name] = coloring_to_json(c, graph);
  Json input_doc = {{"name", input.name},
                    {"dimension", input.dim()},
                    {"vertices", matrix_to_json(input.vertices.transpose())},
                    {"recentered", recentered}};
  if (recentered) input_doc["note"] = "groups refer to the recentered polytope";
  Json out = {{"input", input_doc},
              {"facet_count", facet_count},
              {"edge_count", graph.edge_count()},
              {"edges", edges_to_json(graph.edges())},
              {"izmestiev",
               {{"spectrum", vector_to_json(properties.spectrum)},
                {"kernel_dim", properties.kernel_dim},
                {"eps_eig", number(properties.eps_eig)}}},
              {"properties", properties_to_json(properties)},
              {"colorings", colors},
              {"groups",
               {{"linear", group_to_json(linear, tolerances)},
                {"orthogonal", group_to_json(orthogonal, tolerances)}}},
              {"tolerances", tolerances_to_json(tolerances)}};
  if (seconds) out["timing"] = {{"seconds", *seconds}};
  return out;
}

AnalysisReport AnalysisReport::from_json(const Json& j) {
  AnalysisReport r;
  const auto& in = j.at("input");
  r.input.name = in.at("name").get<std::string>();
  r.input.vertices = matrix_from_json(in.at("vertices")).transpose();
  r.recentered = in.at("recentered").get<bool>();
  r.facet_count = j.at("facet_count").get<int>();
  r.graph = EdgeGraph(r.input.size(), edges_from_json(j.at("edges")));
  r.properties = properties_from_json(j.at("properties"));
  for (const auto& [name, c] : j.at("colorings").items()) r.colorings[name] = coloring_from_json(c, r.graph);
  r.linear = group_from_json(j.at("groups").at("linear"));
  r.orthogonal = group_from_json(j.at("groups").at("orthogonal"));
  r.tolerances = tolerances_from_json(j.at("tolerances"));
  if (j.contains("timing")) r.seconds = j["timing"].at("seconds").get<double>();
  return r;
}

LabeledGraph colored_graph(const PolytopeStructure& s, const std::string& name,
                           const Tolerances& tol) {
  if (name == "metric") return {s.graph, s.metric_coloring};
  if (name == "izmestiev") return {s.graph, s.izmestiev_coloring};
  if (name == "product") return {s.graph, s.product_coloring};
  if (name == "orbit-linear") return {s.graph, orbit_coloring(s.graph, linear_group(s, tol).permutations())};
  if (name == "orbit-orthogonal")
    return {s.graph, orbit_coloring(s.graph, orthogonal_group(s, tol).permutations())};
  throw std::out_of_range("unknown coloring: " + name);
}

AnalysisReport analyze(const Polytope& p, const AnalysisOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const auto s = analyze_structure(p, opts.tol);
  AnalysisReport r;
  r.input = p;
  r.recentered = opts.recentered;
  r.facet_count = s.facets.size();
  r.graph = s.graph;
  r.properties = verify_properties(s.izmestiev, p, opts.tol);
  r.linear = linear_group(s, opts.tol);
  r.orthogonal = orthogonal_group(s, opts.tol);
  r.tolerances = opts.tol;

  auto wanted = [&](const std::string& name) {
    return opts.colorings.empty() ||
           std::find(opts.colorings.begin(), opts.colorings.end(), name) != opts.colorings.end();
  };
  if (wanted("metric")) r.colorings["metric"] = s.metric_coloring;
  if (wanted("izmestiev")) r.colorings["izmestiev"] = s.izmestiev_coloring;
  if (wanted("product")) r.colorings["product"] = s.product_coloring;
  if (wanted("orbit-linear")) r.colorings["orbit-linear"] = orbit_coloring(s.graph, r.linear.permutations());
  if (wanted("orbit-orthogonal"))
    r.colorings["orbit-orthogonal"] = orbit_coloring(s.graph, r.orthogonal.permutations());
  if (opts.timing)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json ValidationReport::to_json(const Tolerances& tol) const {
  return {{"pass", pass()},
          {"matrix_source", from_dump ? "dump" : "geometric"},
          {"properties", properties_to_json(properties)},
          {"eigenspace", eigenspace_to_json(eigenspace)},
          {"finite_difference",
           {{"max_diff", number(fd_max_diff)},
            {"ok", fd_ok},
            {"richardson_gap", number(richardson_gap)},
            {"richardson_ok", richardson_ok}}},
          {"tolerances", tolerances_to_json(tol)}};
}

ValidationReport validate(const Polytope& p, const std::optional<Matrix>& m, const Tolerances& tol) {
  const auto facets = enumerate_facets(p, tol);
  const auto graph = edge_graph(p, facets);
  IzmestievMatrix im;
  im.graph = graph;
  if (m) {
    if (m->rows() != p.size() || m->cols() != p.size())
      throw Error(ErrorKind::DimensionMismatch, "matrix dump size differs from vertex count");
    im.entries = *m;
  } else {
    im = izmestiev_matrix(p, facets, graph, tol);
  }
  ValidationReport r;
  r.from_dump = m.has_value();
  r.properties = verify_properties(im, p, tol);
  r.eigenspace = eigenspace_criterion(im.entries, p.vertices, tol.kern);
  const auto fd = izmestiev_matrix_fd(p, graph, tol.fd_step, tol);
  r.fd_max_diff = (fd.entries - im.entries).cwiseAbs().maxCoeff();
  if (!std::isfinite(r.fd_max_diff)) r.fd_max_diff = std::numeric_limits<double>::infinity();
  r.fd_ok = r.fd_max_diff <= tol.fd_agree;
  r.richardson_gap = fd_richardson_gap(p, graph, tol);
  r.richardson_ok = r.richardson_gap <= tol.fd_agree;
  return r;
}

}  // namespace polysym
