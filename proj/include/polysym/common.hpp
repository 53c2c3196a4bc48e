#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polysym {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Every numerical threshold the library uses, in one place.
///
/// Relative tolerances are scaled by the quantity named next to them; reports
/// echo the whole struct so a result can be traced back to the thresholds
/// that produced it.
struct Tolerances {
  double geom = 1e-9;        // incidence/coplanarity, times max vertex norm
  double color = 1e-8;       // quantization gap, times max(1, max|value|)
  double kern = 1e-8;        // residual of M * Phi^T
  double eig = 1e-8;         // eigenvalue zero/negative threshold, times max|lambda|
  double match = 1e-8;       // ||T v_j - v_sigma(j)|| relative to ||v_sigma(j)||
  double orth = 1e-8;        // ||T^T T - I||_max
  double fd_step = 1e-3;     // finite-difference step for the Hessian oracle
  double fd_agree = 1e-4;    // FD vs geometric matrix, and Richardson check
  double trust = 0.05;       // generalized-dual c must lie in [1-trust, 1+trust]
  int max_vertices = 64;     // automorphism search bound
  long group_limit = 1000000;

  /// Applies "key=value"; throws std::invalid_argument on an unknown key.
  void set(std::string_view key, double value);
};

enum class ErrorKind {
  Parse,
  Validation,
  DegenerateGeometry,
  DimensionMismatch,
  Unbounded,
  SingularAngle,
  KernelResidual,
  DomainMismatch,
  NotAGroup,
  LimitExceeded,
  RankDeficient,
  TheoremViolation,
  TooManyCandidates,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Unordered vertex pair, always stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace polysym
