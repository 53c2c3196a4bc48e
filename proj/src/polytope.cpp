#include "polysym/polytope.hpp"

#include "detail.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace polysym {

namespace detail {

Matrix select_columns(const Matrix& m, const std::vector<int>& cols) {
  Matrix out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(j) = m.col(cols[j]);
  return out;
}

std::vector<Hyperplane> supporting_hyperplanes(const Matrix& points, double eps) {
  const int k = static_cast<int>(points.rows());
  const int m = static_cast<int>(points.cols());
  std::vector<Hyperplane> result;
  std::set<std::vector<int>> seen;

  for_each_combination(m, k, [&](const std::vector<int>& subset) {
    Vector normal(k);
    if (k == 1) {
      normal << 1.0;
    } else {
      Matrix diffs(k - 1, k);
      for (int r = 1; r < k; ++r)
        diffs.row(r - 1) = (points.col(subset[r]) - points.col(subset[0])).transpose();
      Eigen::JacobiSVD<Matrix> svd(diffs, Eigen::ComputeFullV);
      if (svd.singularValues()(k - 2) <= eps) return true;  // affinely dependent
      normal = svd.matrixV().col(k - 1);
    }
    double offset = normal.dot(points.col(subset[0]));
    Vector dist = (points.transpose() * normal).array() - offset;
    if (dist.maxCoeff() > eps) {
      if (dist.minCoeff() < -eps) return true;  // points on both sides
      normal = -normal;
      offset = -offset;
      dist = -dist;
    }
    std::vector<int> members;
    for (int i = 0; i < m; ++i)
      if (std::abs(dist(i)) <= eps) members.push_back(i);
    if (seen.insert(members).second)
      result.push_back({std::move(normal), offset, std::move(members)});
    return true;
  });
  return result;
}

}  // namespace detail

namespace {

using detail::select_columns;

// Volume of conv(y) where y (k x m) is full-dimensional in R^k and centered
// at its centroid: a fan of pyramids from the centroid over every facet.
double hull_volume_centered(const Matrix& y, double rel_tol) {
  const int k = static_cast<int>(y.rows());
  if (k == 1) return y.maxCoeff() - y.minCoeff();
  const double spread = y.colwise().norm().maxCoeff();
  double vol = 0.0;
  for (const auto& facet : detail::supporting_hyperplanes(y, rel_tol * spread))
    vol += facet.offset / k * relative_volume(select_columns(y, facet.members), rel_tol);
  return vol;
}

std::string describe_pair(const char* what, int a, int b) {
  std::ostringstream os;
  os << what << " (vertices " << a << " and " << b << ")";
  return os.str();
}

void validate(const Polytope& p, const Tolerances& tol) {
  const int d = p.dim();
  const int n = p.size();
  if (d < 2) throw Error(ErrorKind::Validation, "dimension must be at least 2");
  if (!p.vertices.allFinite()) throw Error(ErrorKind::Validation, "non-finite coordinate");
  if (n < d + 1 || affine_dimension(p.vertices) != d)
    throw Error(ErrorKind::Validation, "not full-dimensional");
  const double eps = tol.geom * p.scale();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((p.vertex(i) - p.vertex(j)).norm() <= eps)
        throw Error(ErrorKind::Validation, describe_pair("duplicate vertex", i, j));

  const FacetSystem facets = enumerate_facets(p, tol);
  for (int i = 0; i < n; ++i) {
    const auto& incident = facets.vertex_facets[i];
    const Matrix normals = select_columns(facets.normals, incident);
    const bool extreme = static_cast<int>(incident.size()) >= d &&
                         Eigen::FullPivLU<Matrix>(normals).rank() == d;
    if (!extreme)
      throw Error(ErrorKind::Validation, "non-extreme point (vertex " + std::to_string(i) + ")");
  }
}

}  // namespace

double Polytope::scale() const {
  return vertices.size() == 0 ? 0.0 : vertices.colwise().norm().maxCoeff();
}

bool FacetSystem::incident(int facet, int vertex) const {
  const auto& vs = facet_vertices[facet];
  return std::binary_search(vs.begin(), vs.end(), vertex);
}

std::vector<int> FacetSystem::common_facets(int a, int b) const {
  std::vector<int> out;
  std::set_intersection(vertex_facets[a].begin(), vertex_facets[a].end(),
                        vertex_facets[b].begin(), vertex_facets[b].end(),
                        std::back_inserter(out));
  return out;
}

EdgeGraph::EdgeGraph(int n, std::vector<Edge> edges) : n_(n), adj_(n), index_(n * n, -1) {
  for (auto& e : edges) {
    if (e.first == e.second || e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
      throw Error(ErrorKind::Validation, "invalid edge");
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(ErrorKind::Validation, "duplicate edge");
  edges_ = std::move(edges);
  for (int k = 0; k < edge_count(); ++k) {
    auto [a, b] = edges_[k];
    index_[a * n + b] = index_[b * n + a] = k;
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

EdgeGraph EdgeGraph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return EdgeGraph(n, std::move(edges));
}

int EdgeGraph::edge_index(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
  return index_[a * n_ + b];
}

bool EdgeGraph::connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

Polytope make_polytope(Matrix vertices, std::string name, const Tolerances& tol) {
  Polytope p{std::move(name), std::move(vertices)};
  validate(p, tol);
  return p;
}

Polytope load_polytope(std::string_view json_text, const Tolerances& tol, bool recenter) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "document is not an object");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    throw Error(ErrorKind::Parse, "missing integer \"dimension\"");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorKind::Parse, "missing array \"vertices\"");
  const long d = doc["dimension"].get<long>();
  if (d < 1) throw Error(ErrorKind::Parse, "\"dimension\" must be positive");
  const auto& rows = doc["vertices"];
  Matrix v(d, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto& row = rows[j];
    if (!row.is_array() || static_cast<long>(row.size()) != d)
      throw Error(ErrorKind::Parse, "vertex " + std::to_string(j) + " does not have "
                                        + std::to_string(d) + " coordinates");
    for (long k = 0; k < d; ++k) {
      if (!row[k].is_number())
        throw Error(ErrorKind::Parse, "non-numeric coordinate in vertex " + std::to_string(j));
      v(k, j) = row[k].get<double>();
    }
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorKind::Parse, "\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  if (recenter && v.cols() > 0) v.colwise() -= v.rowwise().mean();
  return make_polytope(std::move(v), std::move(name), tol);
}

Polytope load_polytope_file(const std::filesystem::path& path, const Tolerances& tol,
                            bool recenter) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return load_polytope(buf.str(), tol, recenter);
}

std::string polytope_to_json(const Polytope& p) {
  nlohmann::json doc;
  if (!p.name.empty()) doc["name"] = p.name;
  doc["dimension"] = p.dim();
  doc["vertices"] = nlohmann::json::array();
  for (int j = 0; j < p.size(); ++j) {
    std::vector<double> row(p.vertex(j).data(), p.vertex(j).data() + p.dim());
    doc["vertices"].push_back(row);
  }
  return doc.dump();
}

FacetSystem enumerate_facets(const Polytope& p, const Tolerances& tol) {
  const double eps = tol.geom * p.scale();
  const auto planes = detail::supporting_hyperplanes(p.vertices, eps);
  FacetSystem fs;
  fs.normals.resize(p.dim(), static_cast<Eigen::Index>(planes.size()));
  fs.vertex_facets.assign(p.size(), {});
  for (std::size_t f = 0; f < planes.size(); ++f) {
    const auto& h = planes[f];
    if (h.offset < -eps) throw Error(ErrorKind::Validation, "origin not interior");
    if (h.offset <= eps)
      throw Error(ErrorKind::DegenerateGeometry,
                  "supporting hyperplane passes through the origin (origin not interior)");
    fs.normals.col(f) = h.normal / h.offset;
    fs.facet_vertices.push_back(h.members);
    for (int v : h.members) fs.vertex_facets[v].push_back(static_cast<int>(f));
  }
  return fs;
}

EdgeGraph edge_graph(const Polytope& p, const FacetSystem& facets) {
  const int n = p.size();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto common = facets.common_facets(i, j);
      if (common.empty()) continue;
      std::vector<int> face = facets.facet_vertices[common[0]];
      for (std::size_t k = 1; k < common.size() && face.size() > 2; ++k) {
        std::vector<int> next;
        const auto& other = facets.facet_vertices[common[k]];
        std::set_intersection(face.begin(), face.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        face = std::move(next);
      }
      if (face.size() == 2) edges.emplace_back(i, j);
    }
  return EdgeGraph(n, std::move(edges));
}

DualFace dual_edge_face(const Polytope& p, const FacetSystem& facets, Edge edge,
                        const Tolerances& tol) {
  const auto common = facets.common_facets(edge.first, edge.second);
  if (common.empty())
    throw Error(ErrorKind::DimensionMismatch, describe_pair("not an edge", edge.first, edge.second));
  DualFace face{edge, select_columns(facets.normals, common), 0.0};
  if (affine_dimension(face.points, tol.geom) != p.dim() - 2)
    throw Error(ErrorKind::DimensionMismatch,
                describe_pair("dual face is not (d-2)-dimensional", edge.first, edge.second));
  face.relvol = relative_volume(face.points, tol.geom);
  return face;
}

int affine_dimension(const Matrix& points, double rel_tol) {
  if (points.cols() <= 1) return 0;
  Matrix centered = points.colwise() - points.rowwise().mean();
  Eigen::JacobiSVD<Matrix> svd(centered);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int k = 0;
  while (k < s.size() && s(k) > rel_tol * s(0)) ++k;
  return k;
}

double relative_volume(const Matrix& points, double rel_tol) {
  if (points.cols() <= 1) return 1.0;
  Matrix centered = points.colwise() - points.rowwise().mean();
  Eigen::JacobiSVD<Matrix> svd(centered, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 1.0;
  int k = 0;
  while (k < s.size() && s(k) > rel_tol * s(0)) ++k;
  Matrix local = svd.matrixU().leftCols(k).transpose() * centered;
  return hull_volume_centered(local, rel_tol);
}

Matrix generalized_dual_vertices(const Polytope& p, const Vector& c, const Tolerances& tol) {
  const int d = p.dim();
  const int n = p.size();
  if (c.size() != n) throw Error(ErrorKind::DimensionMismatch, "c has wrong length");
  for (int i = 0; i < n; ++i)
    if (!(std::abs(c(i) - 1.0) <= tol.trust * (1.0 + 1e-12)))
      throw Error(ErrorKind::Unbounded, "c outside trust region");

  std::vector<Vector> found;
  detail::for_each_combination(n, d, [&](const std::vector<int>& subset) {
    Matrix a(d, d);
    Vector rhs(d);
    for (int r = 0; r < d; ++r) {
      a.row(r) = p.vertex(subset[r]).transpose();
      rhs(r) = c(subset[r]);
    }
    Eigen::FullPivLU<Matrix> lu(a);
    lu.setThreshold(1e-10);
    if (lu.rank() < d) return true;
    Vector x = lu.solve(rhs);
    Vector slack = p.vertices.transpose() * x - c;
    if (slack.maxCoeff() > tol.geom) return true;
    for (const auto& y : found)
      if ((x - y).norm() <= tol.geom * std::max(x.norm(), y.norm())) return true;
    found.push_back(std::move(x));
    return true;
  });

  Matrix out(d, static_cast<Eigen::Index>(found.size()));
  for (std::size_t j = 0; j < found.size(); ++j) out.col(j) = found[j];
  if (out.cols() < d + 1 || affine_dimension(out) != d)
    throw Error(ErrorKind::Unbounded, "generalized dual is not a bounded full-dimensional body");
  return out;
}

double volume_generalized_dual(const Polytope& p, const Vector& c, const Tolerances& tol) {
  return relative_volume(generalized_dual_vertices(p, c, tol));
}

}  // namespace polysym
