#include "permeaflow/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>

namespace permeaflow {

struct SpectralSolver::Impl {
  int nx, ny;
  double scale;                 // product of per-direction transform scales
  std::vector<double> lam_x;    // Laplacian eigenvalue per transform index
  std::vector<double> lam_y;
  double* in;
  double* out;
  std::vector<double> specA;    // scratch spectra for the 2x2 block solve
  std::vector<double> specB;
  fftw_plan fwd;
  fftw_plan bwd;

  Impl(int nx_, int ny_, double hx, double hy, TransformKind kx, TransformKind ky)
      : nx(nx_), ny(ny_) {
    in = fftw_alloc_real(std::size_t(nx) * ny);
    out = fftw_alloc_real(std::size_t(nx) * ny);
    specA.resize(std::size_t(nx) * ny);
    specB.resize(std::size_t(nx) * ny);

    auto fwd_kind = [](TransformKind k) { return k == TransformKind::Periodic ? FFTW_R2HC : FFTW_REDFT10; };
    auto bwd_kind = [](TransformKind k) { return k == TransformKind::Periodic ? FFTW_HC2R : FFTW_REDFT01; };

    // FFTW_ESTIMATE keeps planning deterministic and leaves the arrays intact.
    fwd = fftw_plan_r2r_2d(ny, nx, in, out, fwd_kind(ky), fwd_kind(kx), FFTW_ESTIMATE);
    bwd = fftw_plan_r2r_2d(ny, nx, in, out, bwd_kind(ky), bwd_kind(kx), FFTW_ESTIMATE);

    scale = (kx == TransformKind::Periodic ? double(nx) : 2.0 * nx) *
            (ky == TransformKind::Periodic ? double(ny) : 2.0 * ny);

    lam_x = eigenvalues(nx, hx, kx);
    lam_y = eigenvalues(ny, hy, ky);
  }

  ~Impl() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(in);
    fftw_free(out);
  }

  static std::vector<double> eigenvalues(int n, double h, TransformKind k) {
    std::vector<double> lam(n);
    for (int p = 0; p < n; ++p) {
      double s;
      if (k == TransformKind::Periodic) {
        const int mode = std::min(p, n - p);  // halfcomplex layout: index p pairs with n-p
        s = std::sin(M_PI * mode / double(n));
      } else {
        s = std::sin(M_PI * p / double(2 * n));
      }
      lam[p] = -4.0 / (h * h) * s * s;
    }
    return lam;
  }

  void forward(const double* src, std::vector<double>& spec) {
    std::memcpy(in, src, sizeof(double) * std::size_t(nx) * ny);
    fftw_execute(fwd);
    std::memcpy(spec.data(), out, sizeof(double) * std::size_t(nx) * ny);
  }

  void backward(const std::vector<double>& spec, double* dst) {
    std::memcpy(in, spec.data(), sizeof(double) * std::size_t(nx) * ny);
    fftw_execute(bwd);
    const double inv = 1.0 / scale;
    for (std::size_t k = 0; k < std::size_t(nx) * ny; ++k) dst[k] = out[k] * inv;
  }
};

SpectralSolver::SpectralSolver(int nx, int ny, double hx, double hy, TransformKind kx,
                               TransformKind ky)
    : impl_(std::make_unique<Impl>(nx, ny, hx, hy, kx, ky)), nx_(nx), ny_(ny) {}

SpectralSolver::~SpectralSolver() = default;

void SpectralSolver::solve_helmholtz(double a, double b, double c, const double* rhs, double* x) {
  impl_->forward(rhs, impl_->specA);
  for (int j = 0; j < ny_; ++j) {
    const double ly = impl_->lam_y[j];
    for (int i = 0; i < nx_; ++i) {
      const double lam = impl_->lam_x[i] + ly;
      const double sym = a + b * lam + c * lam * lam;
      double& s = impl_->specA[std::size_t(i) + std::size_t(nx_) * j];
      s = (sym != 0.0) ? s / sym : 0.0;
    }
  }
  impl_->backward(impl_->specA, x);
}

void SpectralSolver::solve_ch_block(double dt, double mobility, double eps, double s,
                                    const double* bA, const double* bB, double* phi, double* mu) {
  impl_->forward(bA, impl_->specA);
  impl_->forward(bB, impl_->specB);
  for (int j = 0; j < ny_; ++j) {
    const double ly = impl_->lam_y[j];
    for (int i = 0; i < nx_; ++i) {
      const std::size_t k = std::size_t(i) + std::size_t(nx_) * j;
      const double lam = impl_->lam_x[i] + ly;
      // [[1/dt, -M lam], [eps lam - s/eps, 1]] [phi; mu] = [a; b]
      const double det = 1.0 / dt + mobility * lam * (eps * lam - s / eps);
      const double a = impl_->specA[k];
      const double b = impl_->specB[k];
      const double ph = (a + mobility * lam * b) / det;
      const double m = (b - (eps * lam - s / eps) * ph);
      impl_->specA[k] = ph;
      impl_->specB[k] = m;
    }
  }
  impl_->backward(impl_->specA, phi);
  impl_->backward(impl_->specB, mu);
}

bool spectral_kinds(const VarBC& bc, TransformKind& kx, TransformKind& ky) {
  auto dir_kind = [](const SideBC& a, const SideBC& b, TransformKind& k) {
    if (a.type == BCType::Periodic && b.type == BCType::Periodic) {
      k = TransformKind::Periodic;
      return true;
    }
    if (a.type == BCType::HomogeneousNeumann && b.type == BCType::HomogeneousNeumann) {
      k = TransformKind::Neumann;
      return true;
    }
    return false;
  };
  return dir_kind(bc.left, bc.right, kx) && dir_kind(bc.bottom, bc.top, ky);
}

}  // namespace permeaflow
