#include "permeaflow/operators.hpp"

#include <algorithm>
#include <cmath>

namespace permeaflow {

void gradient_into(const ScalarField& f, const VarBC& bc, FaceVectorField& out) {
  const Grid& g = f.grid;
  const int nx = g.nx, ny = g.ny;
  const double ihx = 1.0 / g.hx, ihy = 1.0 / g.hy;

  for (int j = 0; j < ny; ++j) {
    out.fu(0, j) = (f(0, j) - at_ghosted(f, bc, -1, j)) * ihx;
    for (int i = 1; i < nx; ++i) out.fu(i, j) = (f(i, j) - f(i - 1, j)) * ihx;
    out.fu(nx, j) = (at_ghosted(f, bc, nx, j) - f(nx - 1, j)) * ihx;
  }

  if (g.one_d()) {
    std::fill(out.v.begin(), out.v.end(), 0.0);
    return;
  }
  for (int i = 0; i < nx; ++i) {
    out.fv(i, 0) = (f(i, 0) - at_ghosted(f, bc, i, -1)) * ihy;
    out.fv(i, ny) = (at_ghosted(f, bc, i, ny) - f(i, ny - 1)) * ihy;
  }
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i < nx; ++i) out.fv(i, j) = (f(i, j) - f(i, j - 1)) * ihy;
}

FaceVectorField gradient(const ScalarField& f, const VarBC& bc) {
  FaceVectorField out(f.grid);
  gradient_into(f, bc, out);
  return out;
}

void divergence_into(const FaceVectorField& g, ScalarField& out) {
  const Grid& gr = g.grid;
  const int nx = gr.nx, ny = gr.ny;
  const double ihx = 1.0 / gr.hx, ihy = 1.0 / gr.hy;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) out(i, j) = (g.fu(i + 1, j) - g.fu(i, j)) * ihx;
  if (gr.one_d()) return;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) out(i, j) += (g.fv(i, j + 1) - g.fv(i, j)) * ihy;
}

ScalarField divergence(const FaceVectorField& g) {
  ScalarField out(g.grid);
  divergence_into(g, out);
  return out;
}

void laplacian_into(const ScalarField& f, const VarBC& bc, ScalarField& out) {
  FaceVectorField grad(f.grid);
  gradient_into(f, bc, grad);
  divergence_into(grad, out);
}

ScalarField laplacian(const ScalarField& f, const VarBC& bc) {
  ScalarField out(f.grid);
  laplacian_into(f, bc, out);
  return out;
}

void average_to_faces_into(const ScalarField& f, const VarBC& bc, FaceVectorField& out) {
  const Grid& g = f.grid;
  const int nx = g.nx, ny = g.ny;
  for (int j = 0; j < ny; ++j) {
    out.fu(0, j) = 0.5 * (f(0, j) + at_ghosted(f, bc, -1, j));
    for (int i = 1; i < nx; ++i) out.fu(i, j) = 0.5 * (f(i, j) + f(i - 1, j));
    out.fu(nx, j) = 0.5 * (f(nx - 1, j) + at_ghosted(f, bc, nx, j));
  }
  for (int i = 0; i < nx; ++i) {
    out.fv(i, 0) = 0.5 * (f(i, 0) + at_ghosted(f, bc, i, -1));
    out.fv(i, ny) = 0.5 * (f(i, ny - 1) + at_ghosted(f, bc, i, ny));
  }
  for (int j = 1; j < ny; ++j)
    for (int i = 0; i < nx; ++i) out.fv(i, j) = 0.5 * (f(i, j) + f(i, j - 1));
}

FaceVectorField average_to_faces(const ScalarField& f, const VarBC& bc) {
  FaceVectorField out(f.grid);
  average_to_faces_into(f, bc, out);
  return out;
}

void advect_conservative_into(const FaceVectorField& vel, const ScalarField& f, const VarBC& bc,
                              ScalarField& out) {
  FaceVectorField flux(f.grid);
  average_to_faces_into(f, bc, flux);
  for (std::size_t k = 0; k < flux.u.size(); ++k) flux.u[k] *= vel.u[k];
  for (std::size_t k = 0; k < flux.v.size(); ++k) flux.v[k] *= vel.v[k];
  divergence_into(flux, out);
}

ScalarField advect_conservative(const FaceVectorField& vel, const ScalarField& f,
                                const VarBC& bc) {
  ScalarField out(f.grid);
  advect_conservative_into(vel, f, bc, out);
  return out;
}

double cell_integral(const ScalarField& f) {
  // Fixed-block accumulation: deterministic and mildly compensating.
  constexpr std::size_t kBlock = 4096;
  double total = 0.0;
  for (std::size_t b = 0; b < f.v.size(); b += kBlock) {
    double part = 0.0;
    const std::size_t hi = std::min(b + kBlock, f.v.size());
    for (std::size_t k = b; k < hi; ++k) part += f.v[k];
    total += part;
  }
  return total * f.grid.cell_area();
}

double cell_l2_norm(const ScalarField& f) {
  constexpr std::size_t kBlock = 4096;
  double total = 0.0;
  for (std::size_t b = 0; b < f.v.size(); b += kBlock) {
    double part = 0.0;
    const std::size_t hi = std::min(b + kBlock, f.v.size());
    for (std::size_t k = b; k < hi; ++k) part += f.v[k] * f.v[k];
    total += part;
  }
  return std::sqrt(total * f.grid.cell_area());
}

double linf_norm(const ScalarField& f) {
  double m = 0.0;
  for (double x : f.v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace permeaflow
