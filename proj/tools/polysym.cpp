// polysym: symmetry groups of convex polytopes from vertex coordinates.
//
// Machine output is JSON on stdout; --verbose adds a human summary on stderr.
// Exit codes: 0 ok, 1 failed property (validate), 2 invalid input,
// 3 theorem violation, 4 limit exceeded, 64 usage error.

#include "polysym/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace polysym;

namespace {

constexpr int kExitFailedProperty = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitTheorem = 3;
constexpr int kExitLimit = 4;
constexpr int kExitUsage = 64;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TheoremViolation:
    case ErrorKind::KernelResidual:
      return kExitTheorem;
    case ErrorKind::LimitExceeded:
    case ErrorKind::TooManyCandidates:
      return kExitLimit;
    default:
      return kExitInvalid;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::vector<std::string> tolerance;
  long limit = 0;
  bool recenter = false;
  bool verbose = false;

  Tolerances tolerances() const {
    Tolerances tol;
    for (const auto& kv : tolerance) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--tolerance expects key=value, got " + kv);
      double value = 0.0;
      try {
        value = std::stod(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw UsageError("bad tolerance value in " + kv);
      }
      try {
        tol.set(kv.substr(0, eq), value);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (limit > 0) tol.group_limit = limit;
    return tol;
  }
};

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--tolerance", c.tolerance, "Override a tolerance, key=value (repeatable)");
  cmd->add_option("--limit", c.limit, "Maximum automorphism group size");
  cmd->add_flag("--recenter", c.recenter, "Translate vertices by minus their centroid first");
  cmd->add_flag("-v,--verbose", c.verbose, "Human summary on stderr");
}

int cmd_analyze(const std::vector<std::string>& files, const Common& common,
                const std::vector<std::string>& colorings, bool timing) {
  AnalysisOptions opts;
  opts.tol = common.tolerances();
  opts.recentered = common.recenter;
  opts.colorings = colorings;
  opts.timing = timing;

  const int count = static_cast<int>(files.size());
  std::vector<Json> out(count);
  std::vector<int> codes(count, 0);
  std::vector<std::string> summaries(count);

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      const auto p = load_polytope_file(files[k], opts.tol, opts.recentered);
      const auto r = analyze(p, opts);
      out[k] = r.to_json();
      std::ostringstream os;
      os << files[k] << ": n=" << p.size() << " d=" << p.dim() << " facets=" << r.facet_count
         << " edges=" << r.graph.edge_count() << " linear=" << r.linear.order()
         << " orthogonal=" << r.orthogonal.order();
      summaries[k] = os.str();
    } catch (const Error& e) {
      codes[k] = exit_code(e.kind());
      out[k] = {{"path", files[k]},
                {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
      summaries[k] = files[k] + ": " + std::string(to_string(e.kind())) + ": " + e.what();
    }
  }

  for (int k = 0; k < count; ++k) {
    if (common.verbose || codes[k] != 0) std::cerr << summaries[k] << '\n';
  }
  if (count == 1) {
    if (codes[0] == 0) print(out[0]);
    return codes[0];
  }
  print(Json(out));
  for (int c : codes)
    if (c != 0) return c;
  return 0;
}

void write_dump(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << matrix_dump(m).dump(2) << '\n';
}

int cmd_validate(const std::string& file, const Common& common, const std::string& matrix_path,
                 const std::string& dump_path) {
  const auto tol = common.tolerances();
  const auto p = load_polytope_file(file, tol, common.recenter);
  std::optional<Matrix> m;
  if (!matrix_path.empty()) {
    std::ifstream in(matrix_path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + matrix_path);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
    m = matrix_from_dump(doc);
  }
  if (!dump_path.empty()) write_dump(dump_path, izmestiev_matrix(p, tol).entries);
  const auto r = validate(p, m, tol);
  print(r.to_json(tol));
  if (common.verbose) {
    std::cerr << file << ": " << (r.pass() ? "all properties hold" : "property failure")
              << ", kernel dim " << r.properties.kernel_dim << ", negative eigenvalues "
              << r.properties.negative_count << ", FD diff " << r.fd_max_diff << '\n';
  }
  return r.pass() ? 0 : kExitFailedProperty;
}

int cmd_oracle(const std::string& file, const Common& common, const std::string& flavor_name,
               const std::string& candidates, bool embedding, const std::string& dump_path) {
  const auto tol = common.tolerances();
  const Flavor flavor = flavor_name == "orthogonal" ? Flavor::Orthogonal : Flavor::Linear;
  const auto source =
      candidates == "sym" ? CandidateSource::Symmetric : CandidateSource::GraphAutomorphisms;
  Json out = {{"flavor", flavor_name}, {"candidates", candidates}, {"embedding", embedding}};
  MatrixGroup group;
  if (embedding) {
    if (!dump_path.empty()) throw UsageError("--dump-matrix needs a polytope, not an embedding");
    auto e = load_embedding_file(file);
    if (common.recenter) e.coordinates.colwise() -= e.coordinates.rowwise().mean();
    out["input"] = e.name;
    if (source == CandidateSource::GraphAutomorphisms) {
      const auto auts = automorphisms(e.graph, tol);
      out["candidate_count"] = auts.order();
      group = embedding_group(e, auts, flavor, tol);
    } else {
      group = embedding_group(e, source, flavor, tol);
    }
  } else {
    const auto s = analyze_structure(load_polytope_file(file, tol, common.recenter), tol);
    out["input"] = s.polytope.name;
    if (source == CandidateSource::GraphAutomorphisms) {
      const auto auts = automorphisms(s.graph, tol);
      out["candidate_count"] = auts.order();
      group = brute_force_group(s.polytope.vertices, auts, flavor, tol);
    } else {
      group = brute_force_group(s.polytope.vertices, flavor, tol);
    }
    const auto pipeline = flavor == Flavor::Linear ? linear_group(s, tol) : orthogonal_group(s, tol);
    out["pipeline_comparison"] = comparison_to_json(compare_groups(pipeline, group, tol.match));
    if (!dump_path.empty())
      write_dump(dump_path, izmestiev_matrix_fd(s.polytope, s.graph, tol.fd_step, tol).entries);
  }
  out["group"] = group_to_json(group, tol);
  print(out);
  if (common.verbose)
    std::cerr << file << ": oracle " << flavor_name << " group of order " << group.order() << '\n';
  return 0;
}

int cmd_export_dot(const std::string& file, const Common& common, const std::string& coloring) {
  const auto& names = coloring_names();
  if (std::find(names.begin(), names.end(), coloring) == names.end())
    throw UsageError("unknown coloring: " + coloring);
  const auto tol = common.tolerances();
  const auto s = analyze_structure(load_polytope_file(file, tol, common.recenter), tol);
  std::cout << to_dot(colored_graph(s, coloring, tol), s.polytope.name.empty() ? "G" : s.polytope.name);
  return 0;
}

// Does the metric coloring alone capture the orthogonal group? Recorded, not
// asserted.
int cmd_experiment_metric(const std::string& file, const Common& common, const std::string& only) {
  const auto tol = common.tolerances();
  const auto s = analyze_structure(load_polytope_file(file, tol, common.recenter), tol);
  Coloring c = s.metric_coloring;
  const Coloring flat = constant_coloring(s.graph);
  if (only == "vertex") {
    c.edge = flat.edge;
    c.edge_reps = flat.edge_reps;
  } else if (only == "edge") {
    c.vertex = flat.vertex;
    c.vertex_reps = flat.vertex_reps;
  }
  const auto metric_auts = automorphisms(LabeledGraph(s.graph, c), tol);
  const bool full_scan = s.polytope.size() <= kMaxSymmetricDegree;
  const auto oracle =
      full_scan ? brute_force_group(s.polytope.vertices, Flavor::Orthogonal, tol)
                : brute_force_group(s.polytope.vertices, automorphisms(s.graph, tol), Flavor::Orthogonal, tol);
  const auto cmp = compare_permutations(metric_auts, oracle.permutations());
  print({{"input", s.polytope.name},
         {"coloring", only.empty() ? "metric" : "metric-" + only + "-only"},
         {"oracle_candidates", full_scan ? "sym" : "graph-auts"},
         {"metric_aut_order", metric_auts.order()},
         {"oracle_orthogonal_order", oracle.order()},
         {"captures", cmp.equal},
         {"comparison", comparison_to_json(cmp)},
         {"tolerances", tolerances_to_json(tol)}});
  if (common.verbose)
    std::cerr << file << ": |Aut(G^m)| = " << metric_auts.order() << ", |Aut_O| = " << oracle.order()
              << (cmp.equal ? " (captured)" : " (not captured)") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry groups of convex polytopes from vertex coordinates"};
  app.require_subcommand(1);
  Common common;

  std::vector<std::string> files;
  std::vector<std::string> analyze_colorings;
  bool timing = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report: colorings, groups, properties");
  analyze_cmd->add_option("files", files, "Polytope JSON files")->required();
  analyze_cmd->add_option("--coloring", analyze_colorings, "Restrict reported colorings")
      ->check(CLI::IsMember(coloring_names()));
  analyze_cmd->add_flag("--timing", timing, "Include wall-clock time (not deterministic)");
  add_common(analyze_cmd, common);

  std::string file, matrix_path, dump_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check the Izmestiev matrix properties");
  validate_cmd->add_option("file", file, "Polytope JSON file")->required();
  validate_cmd->add_option("--matrix", matrix_path, "Validate this matrix dump instead");
  validate_cmd->add_option("--dump-matrix", dump_path, "Write the geometric matrix dump here");
  add_common(validate_cmd, common);

  std::string flavor = "linear", candidates = "sym";
  bool embedding = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force symmetry group");
  oracle_cmd->add_option("file", file, "Polytope or embedding JSON file")->required();
  oracle_cmd->add_option("--flavor", flavor)->check(CLI::IsMember({"linear", "orthogonal"}));
  oracle_cmd->add_option("--candidates", candidates)->check(CLI::IsMember({"sym", "graph-auts"}));
  oracle_cmd->add_flag("--embedding", embedding, "Treat input as a graph embedding, no validation");
  oracle_cmd->add_option("--dump-matrix", dump_path, "Write the finite-difference matrix dump here");
  add_common(oracle_cmd, common);

  std::string coloring;
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a colored edge-graph");
  dot_cmd->add_option("file", file, "Polytope JSON file")->required();
  dot_cmd->add_option("--coloring", coloring, "metric|izmestiev|product|orbit-linear|orbit-orthogonal")
      ->required();
  add_common(dot_cmd, common);

  std::string only;
  auto* exp_cmd = app.add_subcommand("experiment-metric", "Compare Aut(G^m) with the orthogonal group");
  exp_cmd->add_option("file", file, "Polytope JSON file")->required();
  exp_cmd->add_option("--only", only, "Use only the vertex or only the edge colors")
      ->check(CLI::IsMember({"vertex", "edge"}));
  add_common(exp_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(files, common, analyze_colorings, timing);
    if (*validate_cmd) return cmd_validate(file, common, matrix_path, dump_path);
    if (*oracle_cmd) return cmd_oracle(file, common, flavor, candidates, embedding, dump_path);
    if (*dot_cmd) return cmd_export_dot(file, common, coloring);
    if (*exp_cmd) return cmd_experiment_metric(file, common, only);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kExitUsage;
}
