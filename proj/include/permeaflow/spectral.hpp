#ifndef PERMEAFLOW_SPECTRAL_HPP
#define PERMEAFLOW_SPECTRAL_HPP

#include <memory>
#include <vector>

#include "permeaflow/grid.hpp"

namespace permeaflow {

enum class TransformKind { Periodic, Neumann };

/// Exact diagonalization of the constant-coefficient 5-point Laplacian on a
/// uniform nx-by-ny lattice: FFT in periodic directions, DCT-II in mirrored
/// (homogeneous Neumann) directions. Used as an exact inverse for
/// constant-coefficient solves and as a preconditioner for variable ones.
/// Instances are not thread-safe.
class SpectralSolver {
 public:
  SpectralSolver(int nx, int ny, double hx, double hy, TransformKind kx, TransformKind ky);
  ~SpectralSolver();
  SpectralSolver(const SpectralSolver&) = delete;
  SpectralSolver& operator=(const SpectralSolver&) = delete;

  std::size_t size() const { return std::size_t(nx_) * ny_; }

  /// Solves (a I + b L + c L^2) x = rhs where L is the discrete Laplacian
  /// (eigenvalues <= 0). Modes with zero symbol are annihilated, which
  /// projects out the Poisson nullspace when a = c = 0.
  void solve_helmholtz(double a, double b, double c, const double* rhs, double* x);

  /// Solves the coupled stabilized Cahn-Hilliard block
  ///   phi/dt - M L mu        = bA
  ///   eps L phi - (s/eps) phi + mu = bB
  /// exactly, per Fourier/cosine mode.
  void solve_ch_block(double dt, double mobility, double eps, double s, const double* bA,
                      const double* bB, double* phi, double* mu);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int nx_, ny_;
};

/// Kind per direction from a variable's bc, or nullopt-style failure:
/// returns false when a direction is neither periodic nor homogeneous Neumann.
bool spectral_kinds(const VarBC& bc, TransformKind& kx, TransformKind& ky);

}  // namespace permeaflow

#endif
