#include "polysym/oracle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

namespace polysym {

namespace {

// Accepts sigma iff T v_j = v_sigma(j) for all j, measured against the
// target vertex norm. Deliberately separate from the pipeline's checks.
std::optional<GroupElement> try_candidate(const Matrix& phi, const Matrix& pinv,
                                          const std::vector<int>& image, Flavor flavor,
                                          const Tolerances& tol) {
  const int n = static_cast<int>(image.size());
  Matrix permuted(phi.rows(), n);
  for (int j = 0; j < n; ++j) permuted.col(j) = phi.col(image[j]);
  Matrix t = permuted * pinv;
  const Matrix moved = t * phi;
  for (int j = 0; j < n; ++j)
    if ((moved.col(j) - permuted.col(j)).norm() > tol.match * permuted.col(j).norm())
      return std::nullopt;
  const Matrix gram = t.transpose() * t;
  const bool orth = (gram - Matrix::Identity(t.rows(), t.cols())).cwiseAbs().maxCoeff() <= tol.orth;
  if (flavor == Flavor::Orthogonal && !orth) return std::nullopt;
  return GroupElement{Permutation(image), std::move(t), orth};
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// The permutation of rank r in lexicographic order (factorial number system).
std::vector<int> unrank(int n, long r) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::vector<int> out;
  for (int k = n; k >= 1; --k) {
    const long f = factorial(k - 1);
    const long idx = r / f;
    r %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return out;
}

void check_degree(const Matrix& phi) {
  if (phi.cols() > kMaxSymmetricDegree)
    throw Error(ErrorKind::TooManyCandidates,
                "Sym(V) scan limited to n <= " + std::to_string(kMaxSymmetricDegree));
}

Matrix parse_vertices(const nlohmann::json& doc) {
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    throw Error(ErrorKind::Parse, "missing integer \"dimension\"");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorKind::Parse, "missing array \"vertices\"");
  const long d = doc["dimension"].get<long>();
  if (d < 1) throw Error(ErrorKind::Parse, "\"dimension\" must be positive");
  const auto& rows = doc["vertices"];
  Matrix v(d, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (!rows[j].is_array() || static_cast<long>(rows[j].size()) != d)
      throw Error(ErrorKind::Parse, "vertex " + std::to_string(j) + " has the wrong length");
    for (long k = 0; k < d; ++k) {
      if (!rows[j][k].is_number()) throw Error(ErrorKind::Parse, "non-numeric coordinate");
      v(k, j) = rows[j][k].get<double>();
    }
  }
  return v;
}

}  // namespace

Embedding load_embedding(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "document is not an object");
  Embedding e;
  e.coordinates = parse_vertices(doc);
  if (doc.contains("name") && doc["name"].is_string()) e.name = doc["name"].get<std::string>();
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorKind::Parse, "\"edges\" must be an array");
    for (const auto& pair : doc["edges"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer())
        throw Error(ErrorKind::Parse, "edges must be pairs of vertex indices");
      edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  try {
    e.graph = EdgeGraph(static_cast<int>(e.coordinates.cols()), std::move(edges));
  } catch (const Error& err) {
    throw Error(ErrorKind::Parse, err.what());
  }
  return e;
}

Embedding load_embedding_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return load_embedding(buf.str());
}

MatrixGroup brute_force_group(const Matrix& phi, Flavor flavor, const Tolerances& tol) {
  check_degree(phi);
  const int n = static_cast<int>(phi.cols());
  const Matrix pinv = pseudo_inverse(phi);
  const long total = factorial(n);
  const long chunk = std::max(1L, total / 256);
  const long chunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<GroupElement>> accepted(chunks);

#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < chunks; ++c) {
    const long begin = c * chunk;
    const long end = std::min(total, begin + chunk);
    std::vector<int> image = unrank(n, begin);
    for (long r = begin; r < end; ++r) {
      if (auto el = try_candidate(phi, pinv, image, flavor, tol)) accepted[c].push_back(std::move(*el));
      std::next_permutation(image.begin(), image.end());
    }
  }

  MatrixGroup group{flavor, {}};
  for (auto& part : accepted)
    for (auto& el : part) group.elements.push_back(std::move(el));
  return group;
}

MatrixGroup brute_force_group_serial(const Matrix& phi, Flavor flavor, const Tolerances& tol) {
  check_degree(phi);
  const int n = static_cast<int>(phi.cols());
  const Matrix pinv = pseudo_inverse(phi);
  MatrixGroup group{flavor, {}};
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  do {
    if (auto el = try_candidate(phi, pinv, image, flavor, tol)) group.elements.push_back(std::move(*el));
  } while (std::next_permutation(image.begin(), image.end()));
  return group;
}

MatrixGroup brute_force_group(const Matrix& phi, const PermutationSet& candidates, Flavor flavor,
                              const Tolerances& tol) {
  if (candidates.degree() != phi.cols())
    throw Error(ErrorKind::DomainMismatch, "candidate degree differs from vertex count");
  const Matrix pinv = pseudo_inverse(phi);
  const auto& list = candidates.elements();
  const long count = static_cast<long>(list.size());
  std::vector<std::optional<GroupElement>> results(list.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < count; ++k) results[k] = try_candidate(phi, pinv, list[k].image(), flavor, tol);

  MatrixGroup group{flavor, {}};
  for (auto& r : results)
    if (r) group.elements.push_back(std::move(*r));
  return group;
}

namespace {

Matrix span_coordinates(const Matrix& coords, const Tolerances& tol) {
  Eigen::JacobiSVD<Matrix> svd(coords, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  int rank = 0;
  while (rank < s.size() && s(rank) > tol.geom * std::max(1.0, s(0))) ++rank;
  if (rank == coords.rows()) return coords;
  return svd.matrixU().leftCols(rank).transpose() * coords;
}

}  // namespace

MatrixGroup embedding_group(const Embedding& e, CandidateSource source, Flavor flavor,
                            const Tolerances& tol) {
  const Matrix coords = span_coordinates(e.coordinates, tol);
  if (source == CandidateSource::Symmetric) return brute_force_group(coords, flavor, tol);
  return brute_force_group(coords, automorphisms(e.graph, tol), flavor, tol);
}

MatrixGroup embedding_group(const Embedding& e, const PermutationSet& candidates, Flavor flavor,
                            const Tolerances& tol) {
  return brute_force_group(span_coordinates(e.coordinates, tol), candidates, flavor, tol);
}

ComparisonReport compare_groups(const MatrixGroup& a, const MatrixGroup& b, double eps) {
  ComparisonReport r;
  r.order_a = a.order();
  r.order_b = b.order();
  auto by_perm = [](const GroupElement& x, const GroupElement& y) { return x.perm < y.perm; };
  std::vector<GroupElement> sa = a.elements, sb = b.elements;
  std::sort(sa.begin(), sa.end(), by_perm);
  std::sort(sb.begin(), sb.end(), by_perm);
  std::size_t i = 0, j = 0;
  while (i < sa.size() || j < sb.size()) {
    if (j == sb.size() || (i < sa.size() && sa[i].perm < sb[j].perm)) {
      r.only_in_a.push_back(sa[i++].perm);
    } else if (i == sa.size() || sb[j].perm < sa[i].perm) {
      r.only_in_b.push_back(sb[j++].perm);
    } else {
      if (sa[i].matrix.rows() == sb[j].matrix.rows() && sa[i].matrix.cols() == sb[j].matrix.cols())
        r.max_matrix_diff =
            std::max(r.max_matrix_diff, (sa[i].matrix - sb[j].matrix).cwiseAbs().maxCoeff());
      else
        r.max_matrix_diff = std::numeric_limits<double>::infinity();
      ++i;
      ++j;
    }
  }
  r.equal = r.only_in_a.empty() && r.only_in_b.empty();
  r.matrices_agree = r.max_matrix_diff <= eps;
  return r;
}

ComparisonReport compare_permutations(const PermutationSet& a, const PermutationSet& b) {
  ComparisonReport r;
  r.order_a = a.order();
  r.order_b = b.order();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.only_in_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(r.only_in_b));
  r.equal = r.only_in_a.empty() && r.only_in_b.empty();
  r.matrices_agree = true;
  return r;
}

}  // namespace polysym
