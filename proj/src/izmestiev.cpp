#include "polysym/izmestiev.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <vector>

namespace polysym {

namespace {

struct Stencil {
  const Polytope& p;
  double h;
  double center;  // vol(P°(1))
  const Tolerances& tol;

  double volume_at(int i, double si, int j, double sj) const {
    Vector c = Vector::Ones(p.size());
    c(i) += si * h;
    c(j) += sj * h;
    return volume_generalized_dual(p, c, tol);
  }

  // Minus the second derivative; the sign makes edge entries negative.
  double entry(int i, int j) const {
    if (i == j) {
      Vector c = Vector::Ones(p.size());
      c(i) += h;
      const double up = volume_generalized_dual(p, c, tol);
      c(i) -= 2 * h;
      const double down = volume_generalized_dual(p, c, tol);
      return -(up - 2 * center + down) / (h * h);
    }
    const double pp = volume_at(i, 1, j, 1);
    const double pm = volume_at(i, 1, j, -1);
    const double mp = volume_at(i, -1, j, 1);
    const double mm = volume_at(i, -1, j, -1);
    return -((pp - pm) - (mp - mm)) / (4 * h * h);
  }
};

std::vector<std::pair<int, int>> upper_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

void check_step(double h, const Tolerances& tol) {
  if (!(h > 0.0) || h > tol.trust)
    throw Error(ErrorKind::Unbounded, "finite-difference step outside trust region");
}

}  // namespace

IzmestievMatrix izmestiev_matrix(const Polytope& p, const FacetSystem& facets,
                                 const EdgeGraph& graph, const Tolerances& tol) {
  const int n = p.size();
  Matrix m = Matrix::Zero(n, n);
  for (const auto& e : graph.edges()) {
    const auto [i, j] = e;
    const double ni2 = p.vertex(i).squaredNorm();
    const double nj2 = p.vertex(j).squaredNorm();
    const double dot = p.vertex(i).dot(p.vertex(j));
    // |v_i| |v_j| sin(angle), without forming the angle.
    const double denom = std::sqrt(std::max(0.0, ni2 * nj2 - dot * dot));
    if (denom <= tol.geom * std::sqrt(ni2 * nj2))
      throw Error(ErrorKind::SingularAngle, "edge " + std::to_string(i) + "-" + std::to_string(j) +
                                                " is collinear with the origin");
    const double value = -dual_edge_face(p, facets, e, tol).relvol / denom;
    m(i, j) = m(j, i) = value;
  }

  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    double magnitude = 0.0;
    for (int j : graph.neighbors(i)) {
      sum += m(i, j) * p.vertex(j).dot(p.vertex(i));
      magnitude += std::abs(m(i, j)) * p.vertex(j).norm();
    }
    m(i, i) = -sum / p.vertex(i).squaredNorm();
    Vector residual = m(i, i) * p.vertex(i);
    for (int j : graph.neighbors(i)) residual += m(i, j) * p.vertex(j);
    magnitude += std::abs(m(i, i)) * p.vertex(i).norm();
    if (residual.norm() > tol.kern * std::max(1.0, magnitude))
      throw Error(ErrorKind::KernelResidual,
                  "row " + std::to_string(i) + " violates M Phi^T = 0 (residual " +
                      std::to_string(residual.norm()) + ")");
  }
  return {std::move(m), graph};
}

IzmestievMatrix izmestiev_matrix(const Polytope& p, const Tolerances& tol) {
  const FacetSystem facets = enumerate_facets(p, tol);
  return izmestiev_matrix(p, facets, edge_graph(p, facets), tol);
}

Matrix central_differences(const Polytope& p, double h, const Tolerances& tol) {
  check_step(h, tol);
  const int n = p.size();
  const Stencil stencil{p, h, volume_generalized_dual(p, Vector::Ones(n), tol), tol};
  const auto pairs = upper_pairs(n);
  const long count = static_cast<long>(pairs.size());
  std::vector<double> values(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());

#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      values[k] = stencil.entry(pairs[k].first, pairs[k].second);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  Matrix m(n, n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    m(i, j) = m(j, i) = values[k];
  }
  return m;
}

Matrix central_differences_serial(const Polytope& p, double h, const Tolerances& tol) {
  check_step(h, tol);
  const int n = p.size();
  const Stencil stencil{p, h, volume_generalized_dual(p, Vector::Ones(n), tol), tol};
  Matrix m(n, n);
  for (const auto& [i, j] : upper_pairs(n)) m(i, j) = m(j, i) = stencil.entry(i, j);
  return m;
}

IzmestievMatrix izmestiev_matrix_fd(const Polytope& p, const EdgeGraph& graph, double h,
                                    const Tolerances& tol) {
  Matrix m = 2.0 * central_differences(p, h / 2, tol) - central_differences(p, h, tol);
  return {std::move(m), graph};
}

IzmestievMatrix izmestiev_matrix_fd_serial(const Polytope& p, const EdgeGraph& graph, double h,
                                           const Tolerances& tol) {
  Matrix m = 2.0 * central_differences_serial(p, h / 2, tol) - central_differences_serial(p, h, tol);
  return {std::move(m), graph};
}

double fd_richardson_gap(const Polytope& p, const EdgeGraph& graph, const Tolerances& tol) {
  const auto coarse = izmestiev_matrix_fd(p, graph, tol.fd_step, tol);
  const auto fine = izmestiev_matrix_fd(p, graph, tol.fd_step / 2, tol);
  return (coarse.entries - fine.entries).cwiseAbs().maxCoeff();
}

IzmestievPropertyReport verify_properties(const IzmestievMatrix& m, const Polytope& p,
                                          const Tolerances& tol) {
  IzmestievPropertyReport r;
  const int n = m.size();
  const Matrix& a = m.entries;
  if (a.cols() != n || n != p.size() || m.graph.order() != n) return r;

  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  r.symmetric = (a - a.transpose()).cwiseAbs().maxCoeff() <= tol.kern * scale;
  r.sign_ok = true;
  r.sparsity_ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (m.graph.adjacent(i, j)) {
        if (!(a(i, j) < 0.0 && a(j, i) < 0.0)) r.sign_ok = false;
      } else if (a(i, j) != 0.0 || a(j, i) != 0.0) {
        r.sparsity_ok = false;
      }
    }

  const Matrix sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  r.spectrum = eig.eigenvalues();
  r.eps_eig = tol.eig * r.spectrum.cwiseAbs().maxCoeff();
  for (int k = 0; k < n; ++k) {
    if (r.spectrum(k) < -r.eps_eig) ++r.negative_count;
    if (std::abs(r.spectrum(k)) <= r.eps_eig) ++r.kernel_dim;
  }
  r.unique_negative = r.negative_count == 1;
  r.kernel_residual = (a * p.vertices.transpose()).cwiseAbs().maxCoeff();
  r.kernel_ok = r.kernel_residual <= tol.kern;
  r.kernel_dim_ok = r.kernel_dim == p.dim();
  return r;
}

}  // namespace polysym
