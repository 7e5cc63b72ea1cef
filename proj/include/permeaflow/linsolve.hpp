#ifndef PERMEAFLOW_LINSOLVE_HPP
#define PERMEAFLOW_LINSOLVE_HPP

#include <functional>
#include <string>
#include <vector>

#include "permeaflow/errors.hpp"

namespace permeaflow {

using Vec = std::vector<double>;

/// Deterministic dot product (fixed-block accumulation order).
double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm_inf(const Vec& a);
void axpy(double alpha, const Vec& x, Vec& y);            // y += alpha x
void scale_add(Vec& y, double beta, const Vec& x);        // y = x + beta y

/// Matrix-free linear system on grid unknowns.
struct LinearSystem {
  std::function<void(const Vec&, Vec&)> apply;  // y = A x
  Vec rhs;
  std::size_t size = 0;   // unknown layout: flat length
  std::string label;      // for diagnostics
  bool symmetric = false; // SPD systems get CG, others BiCGStab
};

/// Approximate inverse used as a right preconditioner: z = M^{-1} r.
using Preconditioner = std::function<void(const Vec&, Vec&)>;

struct SolverStats {
  int iterations = 0;
  double rel_residual = 0.0;
};

struct KrylovConfig {
  double tol = 1e-10;   // relative to ||b|| (and never below the rounding floor)
  int max_iters = 10000;
};

/// Solves sys to relative residual <= cfg.tol. Dispatches CG for symmetric
/// systems and BiCGStab otherwise. x0, when given, seeds the iteration
/// (the stopping test stays relative to ||b||). Throws NonconvergenceError
/// carrying the final residual when the iteration budget runs out.
Vec solve_linear(const LinearSystem& sys, const KrylovConfig& cfg,
                 const Preconditioner* precond = nullptr, const Vec* x0 = nullptr,
                 SolverStats* stats = nullptr);

}  // namespace permeaflow

#endif
