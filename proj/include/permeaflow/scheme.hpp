#ifndef PERMEAFLOW_SCHEME_HPP
#define PERMEAFLOW_SCHEME_HPP

#include <memory>
#include <utility>

#include "permeaflow/grid.hpp"
#include "permeaflow/linsolve.hpp"
#include "permeaflow/model.hpp"
#include "permeaflow/operators.hpp"

namespace permeaflow {

/// Full solution snapshot at one time level. The stored pressure is the
/// shifted variable p - phi*mu/Ca of the splitting scheme.
struct State {
  ScalarField phi, mu, c, p;
  FaceVectorField vel;
  double t = 0.0;
  long n = 0;
};

enum class Step3Mode {
  LinearizedFlux,  // j = -D grad(c): one nonsymmetric linear solve
  EntropyFlux,     // j = -D c grad(ln c): Newton on the entropy form
};

struct SolverConfig {
  double dt = 1e-3;
  double gauss_tol = 1e-8;
  int gauss_max_iters = 100;
  double lin_tol = 1e-10;
  int lin_max_iters = 20000;
  double newton_tol = 1e-11;
  int newton_max_iters = 60;
  Step3Mode step3_mode = Step3Mode::EntropyFlux;

  void validate() const;
};

struct Step1Result {
  ScalarField phi, mu;
  FaceVectorField u_tilde;
  int gauss_iterations = 0;
};

/// Per-advance iteration counters, refreshed by the stepping calls.
struct StepDiagnostics {
  int gauss_iterations = 0;
  int newton_iterations = 0;
  int linear_iterations = 0;   // summed over all Krylov solves
  bool negative_concentration = false;  // LinearizedFlux diagnostic
};

/// Decoupled energy-stable integrator for one fixed (grid, params, config,
/// bc) tuple; caches the fast-transform preconditioners. One advance is
/// Step 1 (block Gauss over coupled CH + tentative momentum), Step 2
/// (pressure-correction projection), Step 3 (implicit concentration).
class Scheme {
 public:
  Scheme(const Grid& grid, const PhysicalParams& params, const SolverConfig& cfg,
         const BoundarySpec& bc);
  ~Scheme();
  Scheme(const Scheme&) = delete;
  Scheme& operator=(const Scheme&) = delete;

  Step1Result step1_phase_velocity(const State& state) const;
  std::pair<FaceVectorField, ScalarField> step2_projection(const FaceVectorField& u_tilde,
                                                           const ScalarField& p_old) const;
  ScalarField step3_concentration(const State& state, const ScalarField& phi_next,
                                  const FaceVectorField& u_next) const;

  State advance(const State& state) const;
  /// Step 3 only: phi and vel held fixed (frozen-interface verification cases).
  State advance_frozen(const State& state) const;

  const StepDiagnostics& diagnostics() const { return diag_; }
  const Grid& grid() const { return grid_; }
  const PhysicalParams& params() const { return params_; }
  const SolverConfig& config() const { return cfg_; }
  const BoundarySpec& bc() const { return bc_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  Grid grid_;
  PhysicalParams params_;
  SolverConfig cfg_;
  BoundarySpec bc_;
  mutable StepDiagnostics diag_;
};

// One-shot forms of the stepping operations (build a Scheme internally).
Step1Result step1_phase_velocity(const State& state, const PhysicalParams& params,
                                 const SolverConfig& cfg, const BoundarySpec& bc);
std::pair<FaceVectorField, ScalarField> step2_projection(const FaceVectorField& u_tilde,
                                                         const ScalarField& p_old, double Re,
                                                         double dt, const BoundarySpec& bc,
                                                         double lin_tol = 1e-10,
                                                         int lin_max_iters = 20000);
ScalarField step3_concentration(const State& state, const ScalarField& phi_next,
                                const FaceVectorField& u_next, const PhysicalParams& params,
                                const SolverConfig& cfg, const BoundarySpec& bc);
State advance(const State& state, const PhysicalParams& params, const SolverConfig& cfg,
              const BoundarySpec& bc);

/// mu = -eps lap(phi) + G'(phi)/eps, the initialization rule (no
/// stabilization term).
ScalarField chemical_potential(const ScalarField& phi, const PhysicalParams& params,
                               const VarBC& phi_bc);

/// Subtracts the cell mean (pure-Neumann pressure gauge).
void subtract_mean(ScalarField& f);

}  // namespace permeaflow

#endif
