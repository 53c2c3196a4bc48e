#include "polysym/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polysym {

namespace {

std::string describe_failure(const char* what, const Permutation& sigma, const Matrix& t,
                             double error) {
  std::ostringstream os;
  os << what << ": sigma = [";
  for (int i = 0; i < sigma.size(); ++i) os << (i ? "," : "") << sigma(i);
  Eigen::IOFormat fmt(Eigen::FullPrecision, Eigen::DontAlignCols, ",", ";", "[", "]", "[", "]");
  os << "], T = " << t.format(fmt) << ", error = " << error;
  return os.str();
}

}  // namespace

Matrix pseudo_inverse(const Matrix& phi) {
  const Matrix gram = phi * phi.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  if (ev.size() == 0 || ev(0) <= 1e-12 * std::max(1.0, ev(ev.size() - 1)))
    throw Error(ErrorKind::RankDeficient, "vertex matrix does not have full row rank");
  Matrix pinv = phi.transpose() * gram.ldlt().solve(Matrix::Identity(phi.rows(), phi.rows()));
  return pinv;
}

Matrix linear_map_from_perm(const Matrix& phi, const Matrix& phi_pinv, const Permutation& sigma) {
  Matrix permuted(phi.rows(), phi.cols());
  for (int j = 0; j < sigma.size(); ++j) permuted.col(j) = phi.col(sigma(j));  // Phi * Pi_sigma
  return permuted * phi_pinv;
}

Matrix linear_map_from_perm(const Matrix& phi, const Permutation& sigma) {
  return linear_map_from_perm(phi, pseudo_inverse(phi), sigma);
}

double realization_error(const Matrix& t, const Permutation& sigma, const Matrix& phi) {
  double worst = 0.0;
  for (int j = 0; j < sigma.size(); ++j) {
    const auto target = phi.col(sigma(j));
    const double err = (t * phi.col(j) - target).norm();
    const double scale = target.norm();
    worst = std::max(worst, scale > 0 ? err / scale : err);
  }
  return worst;
}

bool check_realizes(const Matrix& t, const Permutation& sigma, const Matrix& phi, double eps) {
  if (t.rows() != phi.rows() || t.cols() != phi.rows() || sigma.size() != phi.cols()) return false;
  for (int j = 0; j < sigma.size(); ++j) {
    const auto target = phi.col(sigma(j));
    if ((t * phi.col(j) - target).norm() > eps * target.norm()) return false;
  }
  return true;
}

bool check_orthogonal(const Matrix& t, double eps) {
  if (t.rows() != t.cols()) return false;
  return (t.transpose() * t - Matrix::Identity(t.rows(), t.cols())).cwiseAbs().maxCoeff() <= eps;
}

EigenspaceCheck eigenspace_criterion(const Matrix& a, const Matrix& phi, double eps) {
  EigenspaceCheck out;
  const Matrix basis = phi.transpose();  // n x d, spans the same space as Phi^+
  const Matrix image = a * basis;
  out.eigenvalue = (image.array() * basis.array()).sum() / basis.squaredNorm();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff()) * std::max(1.0, basis.cwiseAbs().maxCoeff());
  out.residual = (image - out.eigenvalue * basis).cwiseAbs().maxCoeff() / scale;

  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (a + a.transpose()), Eigen::EigenvaluesOnly);
  const double spread = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  for (int k = 0; k < eig.eigenvalues().size(); ++k)
    if (std::abs(eig.eigenvalues()(k) - out.eigenvalue) <= eps * spread) ++out.multiplicity;
  out.holds = out.residual <= eps;
  return out;
}

std::string_view to_string(Flavor f) { return f == Flavor::Linear ? "linear" : "orthogonal"; }

PermutationSet MatrixGroup::permutations() const {
  std::vector<Permutation> perms;
  perms.reserve(elements.size());
  for (const auto& e : elements) perms.push_back(e.perm);
  return PermutationSet(std::move(perms));
}

PolytopeStructure analyze_structure(const Polytope& p, const Tolerances& tol) {
  PolytopeStructure s{p, enumerate_facets(p, tol), {}, {}, {}, {}, {}};
  s.graph = edge_graph(p, s.facets);
  s.izmestiev = izmestiev_matrix(p, s.facets, s.graph, tol);
  s.izmestiev_coloring = izmestiev_coloring(s.izmestiev, tol);
  s.metric_coloring = metric_coloring(p, s.graph, tol);
  s.product_coloring = polysym::product_coloring(s.izmestiev_coloring, s.metric_coloring);
  return s;
}

MatrixGroup realize_group(const Polytope& p, const PermutationSet& auts, Flavor flavor,
                          const Tolerances& tol) {
  const Matrix pinv = pseudo_inverse(p.vertices);
  MatrixGroup group{flavor, {}};
  for (const auto& sigma : auts) {
    Matrix t = linear_map_from_perm(p.vertices, pinv, sigma);
    if (!check_realizes(t, sigma, p.vertices, tol.match))
      throw Error(ErrorKind::TheoremViolation,
                  describe_failure("automorphism does not realize", sigma, t,
                                   realization_error(t, sigma, p.vertices)));
    const bool orth = check_orthogonal(t, tol.orth);
    if (flavor == Flavor::Orthogonal && !orth)
      throw Error(ErrorKind::TheoremViolation,
                  describe_failure("automorphism realizes a non-orthogonal map", sigma, t,
                                   (t.transpose() * t - Matrix::Identity(t.rows(), t.cols()))
                                       .cwiseAbs()
                                       .maxCoeff()));
    group.elements.push_back({sigma, std::move(t), orth});
  }
  try {
    (void)group.permutations();
  } catch (const Error& e) {
    throw Error(ErrorKind::TheoremViolation, std::string("realized set is not a group: ") + e.what());
  }
  return group;
}

MatrixGroup linear_group(const PolytopeStructure& s, const Tolerances& tol) {
  const auto auts = automorphisms(LabeledGraph(s.graph, s.izmestiev_coloring), tol);
  return realize_group(s.polytope, auts, Flavor::Linear, tol);
}

MatrixGroup linear_group(const Polytope& p, const Tolerances& tol) {
  return linear_group(analyze_structure(p, tol), tol);
}

MatrixGroup orthogonal_group(const PolytopeStructure& s, const Tolerances& tol) {
  const auto auts = automorphisms(LabeledGraph(s.graph, s.product_coloring), tol);
  return realize_group(s.polytope, auts, Flavor::Orthogonal, tol);
}

MatrixGroup orthogonal_group(const Polytope& p, const Tolerances& tol) {
  return orthogonal_group(analyze_structure(p, tol), tol);
}

}  // namespace polysym
