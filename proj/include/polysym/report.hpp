#pragma once

#include "polysym/oracle.hpp"
#include "polysym/reconstruct.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polysym {

using Json = nlohmann::json;

// Rows as arrays. Non-finite values become null.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"n": int, "entries": [[...], ...]}
Json matrix_dump(const Matrix& m);
/// Throws Error(Parse) unless the document is a square n x n dump.
Matrix matrix_from_dump(const Json& j);

Json tolerances_to_json(const Tolerances& tol);
Tolerances tolerances_from_json(const Json& j);

/// {"vertex_classes", "edge_classes", "representatives"}
Json coloring_to_json(const Coloring& c, const EdgeGraph& g);
Coloring coloring_from_json(const Json& j, const EdgeGraph& g);

/// {"flavor", "order", "tolerances", "elements": [{"perm","matrix","orthogonal"}]}
Json group_to_json(const MatrixGroup& g, const Tolerances& tol);
MatrixGroup group_from_json(const Json& j);

Json properties_to_json(const IzmestievPropertyReport& r);
IzmestievPropertyReport properties_from_json(const Json& j);

Json eigenspace_to_json(const EigenspaceCheck& e);
Json comparison_to_json(const ComparisonReport& r);

struct AnalysisOptions {
  Tolerances tol;
  bool recentered = false;
  std::vector<std::string> colorings;  // empty: all
  bool timing = false;
};

/// Coloring names accepted by analysis and DOT export.
const std::vector<std::string>& coloring_names();

struct AnalysisReport {
  Polytope input;
  bool recentered = false;
  int facet_count = 0;
  EdgeGraph graph;
  IzmestievPropertyReport properties;
  std::map<std::string, Coloring> colorings;
  MatrixGroup linear;
  MatrixGroup orthogonal;
  Tolerances tolerances;
  std::optional<double> seconds;

  Json to_json() const;
  static AnalysisReport from_json(const Json& j);
};

/// Runs the full pipeline on a validated polytope.
AnalysisReport analyze(const Polytope& p, const AnalysisOptions& opts = {});

/// The named coloring of an analyzed polytope. Throws std::out_of_range on
/// an unknown name.
LabeledGraph colored_graph(const PolytopeStructure& s, const std::string& name,
                           const Tolerances& tol = {});

struct ValidationReport {
  IzmestievPropertyReport properties;
  EigenspaceCheck eigenspace;  // span(Phi^T) as an eigenspace of M
  double fd_max_diff = 0.0;
  bool fd_ok = false;
  double richardson_gap = 0.0;
  bool richardson_ok = false;
  bool from_dump = false;

  bool pass() const { return properties.pass() && eigenspace.holds && fd_ok && richardson_ok; }
  Json to_json(const Tolerances& tol) const;
};

/// Theorem properties, eigenspace criterion and finite-difference agreement
/// for `m` (the geometric matrix when absent).
ValidationReport validate(const Polytope& p, const std::optional<Matrix>& m,
                          const Tolerances& tol = {});

}  // namespace polysym
