#include "permeaflow/linsolve.hpp"

#include <algorithm>
#include <cmath>

namespace permeaflow {

double dot(const Vec& a, const Vec& b) {
  constexpr std::size_t kBlock = 4096;
  double total = 0.0;
  for (std::size_t s = 0; s < a.size(); s += kBlock) {
    double part = 0.0;
    const std::size_t hi = std::min(s + kBlock, a.size());
    for (std::size_t k = s; k < hi; ++k) part += a[k] * b[k];
    total += part;
  }
  return total;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

double norm_inf(const Vec& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

void axpy(double alpha, const Vec& x, Vec& y) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += alpha * x[k];
}

void scale_add(Vec& y, double beta, const Vec& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = x[k] + beta * y[k];
}

namespace {

void apply_precond(const Preconditioner* m, const Vec& r, Vec& z) {
  if (m) {
    (*m)(r, z);
  } else {
    z = r;
  }
}

Vec solve_cg(const LinearSystem& sys, const KrylovConfig& cfg, const Preconditioner* precond,
             const Vec* x0, SolverStats* stats) {
  const std::size_t n = sys.size;
  Vec x = x0 ? *x0 : Vec(n, 0.0);
  Vec r(n), z(n), p(n), ap(n);

  const double bnorm = norm2(sys.rhs);
  if (bnorm == 0.0) {
    if (stats) *stats = {0, 0.0};
    return Vec(n, 0.0);
  }
  const double target = cfg.tol * bnorm;

  sys.apply(x, ap);
  for (std::size_t k = 0; k < n; ++k) r[k] = sys.rhs[k] - ap[k];

  apply_precond(precond, r, z);
  p = z;
  double rz = dot(r, z);
  double rnorm = norm2(r);

  int it = 0;
  while (rnorm > target && it < cfg.max_iters) {
    sys.apply(p, ap);
    const double pap = dot(p, ap);
    if (pap == 0.0) break;
    const double alpha = rz / pap;
    axpy(alpha, p, x);
    axpy(-alpha, ap, r);
    rnorm = norm2(r);
    ++it;
    if (rnorm <= target) break;
    apply_precond(precond, r, z);
    const double rz_new = dot(r, z);
    scale_add(p, rz_new / rz, z);
    rz = rz_new;
  }

  if (stats) *stats = {it, rnorm / bnorm};
  if (rnorm > target) {
    throw NonconvergenceError("CG did not converge for " + sys.label + " (rel residual " +
                                  std::to_string(rnorm / bnorm) + " after " + std::to_string(it) +
                                  " iterations)",
                              rnorm / bnorm);
  }
  return x;
}

Vec solve_bicgstab(const LinearSystem& sys, const KrylovConfig& cfg,
                   const Preconditioner* precond, const Vec* x0, SolverStats* stats) {
  const std::size_t n = sys.size;
  Vec x = x0 ? *x0 : Vec(n, 0.0);
  Vec r(n), r0(n), p(n, 0.0), v(n, 0.0), s(n), t(n), phat(n), shat(n);

  const double bnorm = norm2(sys.rhs);
  if (bnorm == 0.0) {
    if (stats) *stats = {0, 0.0};
    return Vec(n, 0.0);
  }
  const double target = cfg.tol * bnorm;

  sys.apply(x, t);
  for (std::size_t k = 0; k < n; ++k) r[k] = sys.rhs[k] - t[k];
  r0 = r;

  double rho = 1.0, alpha = 1.0, omega = 1.0;
  double rnorm = norm2(r);
  int it = 0;

  while (rnorm > target && it < cfg.max_iters) {
    const double rho_new = dot(r0, r);
    if (rho_new == 0.0) break;  // breakdown; report the residual we have
    if (it == 0) {
      p = r;
    } else {
      const double beta = (rho_new / rho) * (alpha / omega);
      for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + beta * (p[k] - omega * v[k]);
    }
    rho = rho_new;

    apply_precond(precond, p, phat);
    sys.apply(phat, v);
    const double r0v = dot(r0, v);
    if (r0v == 0.0) break;
    alpha = rho / r0v;
    for (std::size_t k = 0; k < n; ++k) s[k] = r[k] - alpha * v[k];

    if (norm2(s) <= target) {
      axpy(alpha, phat, x);
      rnorm = norm2(s);
      ++it;
      break;
    }

    apply_precond(precond, s, shat);
    sys.apply(shat, t);
    const double tt = dot(t, t);
    if (tt == 0.0) break;
    omega = dot(t, s) / tt;
    for (std::size_t k = 0; k < n; ++k) x[k] += alpha * phat[k] + omega * shat[k];
    for (std::size_t k = 0; k < n; ++k) r[k] = s[k] - omega * t[k];
    rnorm = norm2(r);
    ++it;
    if (omega == 0.0) break;
  }

  // Guard against drift between the recursive and true residuals.
  sys.apply(x, t);
  for (std::size_t k = 0; k < n; ++k) t[k] = sys.rhs[k] - t[k];
  rnorm = norm2(t);

  if (stats) *stats = {it, rnorm / bnorm};
  if (rnorm > target) {
    throw NonconvergenceError("BiCGStab did not converge for " + sys.label + " (rel residual " +
                                  std::to_string(rnorm / bnorm) + " after " + std::to_string(it) +
                                  " iterations)",
                              rnorm / bnorm);
  }
  return x;
}

}  // namespace

Vec solve_linear(const LinearSystem& sys, const KrylovConfig& cfg, const Preconditioner* precond,
                 const Vec* x0, SolverStats* stats) {
  if (sys.rhs.size() != sys.size) throw ConfigError("solve_linear: rhs/layout size mismatch");
  if (sys.symmetric) return solve_cg(sys, cfg, precond, x0, stats);
  return solve_bicgstab(sys, cfg, precond, x0, stats);
}

}  // namespace permeaflow
