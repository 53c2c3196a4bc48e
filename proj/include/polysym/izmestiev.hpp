#pragma once

#include "polysym/polytope.hpp"

namespace polysym {

/// Symmetric n x n matrix supported on the edge-graph: negative on edges,
/// zero on non-edges, with the vertex coordinate rows in its kernel.
struct IzmestievMatrix {
  Matrix entries;
  EdgeGraph graph;

  int size() const { return static_cast<int>(entries.rows()); }
};

/// Geometric construction. Edge entries are
///   M_ij = -vol(f_ij) / (|v_i| |v_j| sin angle(v_i, v_j))
/// with f_ij the dual face of the edge; the diagonal is solved row-wise from
/// M * Phi^T = 0 and the full vector residual of each row is checked.
///
/// Throws Error(SingularAngle) if an edge is collinear with the origin and
/// Error(KernelResidual) if a row residual exceeds tol.kern.
IzmestievMatrix izmestiev_matrix(const Polytope& p, const FacetSystem& facets,
                                 const EdgeGraph& graph, const Tolerances& tol = {});

/// Convenience: facets and edge-graph computed internally.
IzmestievMatrix izmestiev_matrix(const Polytope& p, const Tolerances& tol = {});

/// Minus the Hessian of vol(P°(c)) at c = 1 by central differences with
/// step h: 4-point stencil for mixed entries, 3-point for the diagonal.
/// Parallel over matrix entries.
Matrix central_differences(const Polytope& p, double h, const Tolerances& tol = {});

/// Serial reference for central_differences; identical results.
Matrix central_differences_serial(const Polytope& p, double h, const Tolerances& tol = {});

/// Finite-difference oracle for the Izmestiev matrix. Where P° is not simple
/// the dual volume is C^2 but not C^3 at c = 1 and central differences carry
/// an O(h) error, so the estimate is Richardson-extrapolated:
///   2 * D(h/2) - D(h).
IzmestievMatrix izmestiev_matrix_fd(const Polytope& p, const EdgeGraph& graph, double h,
                                    const Tolerances& tol = {});

/// Serial reference for izmestiev_matrix_fd; identical results.
IzmestievMatrix izmestiev_matrix_fd_serial(const Polytope& p, const EdgeGraph& graph, double h,
                                           const Tolerances& tol = {});

/// Max entrywise difference between the FD oracle at h and at h/2. A value
/// above tol.fd_agree signals a combinatorial flip of P°(c) inside the stencil.
double fd_richardson_gap(const Polytope& p, const EdgeGraph& graph, const Tolerances& tol = {});

struct IzmestievPropertyReport {
  bool symmetric = false;
  bool sign_ok = false;         // M_ij < 0 on edges
  bool sparsity_ok = false;     // M_ij = 0 on non-edges
  int negative_count = 0;       // eigenvalues below -eps_eig
  bool unique_negative = false;
  double kernel_residual = 0.0;  // ||M Phi^T||_max
  bool kernel_ok = false;
  int kernel_dim = 0;           // eigenvalues with |lambda| <= eps_eig
  bool kernel_dim_ok = false;
  double eps_eig = 0.0;
  Vector spectrum;              // ascending

  bool pass() const {
    return symmetric && sign_ok && sparsity_ok && unique_negative && kernel_ok && kernel_dim_ok;
  }
};

/// Checks the five structural properties; never throws on failure, the
/// report carries it.
IzmestievPropertyReport verify_properties(const IzmestievMatrix& m, const Polytope& p,
                                          const Tolerances& tol = {});

}  // namespace polysym
