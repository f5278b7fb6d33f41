#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmsel {

struct CgResult {
  int iterations = 0;
  double rel_residual = 0.0;
};

/// Scratch vectors reused across solves within one owner.
struct CgWorkspace {
  std::vector<double> r, z, p, q;
  void resize(size_t n) {
    r.resize(n);
    z.resize(n);
    p.resize(n);
    q.resize(n);
  }
};

/// Preconditioned conjugate gradient for a symmetric positive-definite
/// operator given as a callback `apply(x, y)` computing y = A x. The operator
/// is applied matrix-free; no global matrix is ever assembled here.
///
/// `x` holds the initial guess on entry and the solution on return. The
/// preconditioner is Jacobi via `inv_diag` (pass nullptr for none). Returns
/// once the relative residual ||b - A x|| / ||b|| drops to `tol`; throws
/// std::runtime_error if `max_iter` iterations do not get there.
template <class Apply>
CgResult cg_solve(Apply&& apply, const std::vector<double>& b, std::vector<double>& x,
                  const std::vector<double>* inv_diag, double tol, int max_iter,
                  CgWorkspace* ws = nullptr) {
  const size_t n = b.size();
  if (x.size() != n) throw std::invalid_argument("cg_solve: x/b size mismatch");
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("cg_solve: tol must be in (0, 1)");

  CgWorkspace local;
  CgWorkspace& w = ws ? *ws : local;
  w.resize(n);

  double bnorm2 = 0.0;
  for (size_t i = 0; i < n; ++i) bnorm2 += b[i] * b[i];
  if (bnorm2 == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    return {0, 0.0};
  }
  const double target2 = tol * tol * bnorm2;

  // r = b - A x0
  apply(x, w.q);
  double rnorm2 = 0.0;
  for (size_t i = 0; i < n; ++i) {
    w.r[i] = b[i] - w.q[i];
    rnorm2 += w.r[i] * w.r[i];
  }
  if (rnorm2 <= target2) return {0, std::sqrt(rnorm2 / bnorm2)};

  double rz = 0.0;
  for (size_t i = 0; i < n; ++i) {
    w.z[i] = inv_diag ? (*inv_diag)[i] * w.r[i] : w.r[i];
    w.p[i] = w.z[i];
    rz += w.r[i] * w.z[i];
  }

  for (int k = 1; k <= max_iter; ++k) {
    apply(w.p, w.q);
    double pq = 0.0;
    for (size_t i = 0; i < n; ++i) pq += w.p[i] * w.q[i];
    const double alpha = rz / pq;
    rnorm2 = 0.0;
    for (size_t i = 0; i < n; ++i) {
      x[i] += alpha * w.p[i];
      w.r[i] -= alpha * w.q[i];
      rnorm2 += w.r[i] * w.r[i];
    }
    if (rnorm2 <= target2) return {k, std::sqrt(rnorm2 / bnorm2)};
    double rz_next = 0.0;
    for (size_t i = 0; i < n; ++i) {
      w.z[i] = inv_diag ? (*inv_diag)[i] * w.r[i] : w.r[i];
      rz_next += w.r[i] * w.z[i];
    }
    const double beta = rz_next / rz;
    rz = rz_next;
    for (size_t i = 0; i < n; ++i) w.p[i] = w.z[i] + beta * w.p[i];
  }
  throw std::runtime_error("cg_solve: no convergence in " + std::to_string(max_iter) +
                           " iterations (relative residual " +
                           std::to_string(std::sqrt(rnorm2 / bnorm2)) + ")");
}

}  // namespace gmsel
