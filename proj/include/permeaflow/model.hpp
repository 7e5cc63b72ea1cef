#ifndef PERMEAFLOW_MODEL_HPP
#define PERMEAFLOW_MODEL_HPP

#include "permeaflow/errors.hpp"

namespace permeaflow {

/// Trans-membrane flux law: flux = K [[Q(c)]] with q = dQ/dc.
enum class FluxLaw {
  Linear,       // Q(c) = c,    q = 1
  Logarithmic,  // Q(c) = ln c, q = 1/c (requires c > 0)
};

/// Constants of the tanh(xi/sqrt(2)) interface profile.
/// sigma = 2*sqrt(2)/3 is the surface tension, A = 2*sigma is the
/// profile integral that calibrates the effective diffusivity.
struct AsymptoticConstants {
  static constexpr double sigma = 0.9428090415820633658677924;  // 2*sqrt(2)/3
  static constexpr double A = 2.0 * sigma;                      // 4*sqrt(2)/3
};

/// Dimensionless parameters of the coupled system.
struct PhysicalParams {
  double Re = 1.0;
  double Ca = 1.0;
  double Pe = 1.0;
  double epsilon = 0.08;  // interface width
  double mobility = 0.08;
  double K = 1.0 / AsymptoticConstants::A;  // interface permeability
  double D_plus = 1.0;
  double D_minus = 1.0;
  double s = 2.0;  // stabilization constant
  FluxLaw q_law = FluxLaw::Linear;

  void validate() const;
};

/// q = dQ/dc. Throws on non-positive c under the logarithmic law.
double q_of_c(double c, FluxLaw law);

/// Same with the solver-loop safeguard: c floored at 1e-12 first.
double q_of_c_safe(double c, FluxLaw law);

/// Effective diffusivity 1/D = (1-phi^2)^2/(A K q eps) + (1-phi)/(2 D-) + (1+phi)/(2 D+),
/// with phi clamped to [-1,1]. K=0 away from the pure phases returns 0
/// (impermeable membrane). q must be positive.
double effective_diffusivity(double phi, double q, const PhysicalParams& p,
                             double A = AsymptoticConstants::A);

/// tanh(d / (sqrt(2) eps)) interface profile of the signed distance d.
double tanh_profile(double signed_distance, double epsilon);

/// G'(phi) = phi^3 - phi for the double well G = (1-phi^2)^2/4.
double double_well_prime(double phi);

/// G(phi) = (1-phi^2)^2/4.
double double_well(double phi);

}  // namespace permeaflow

#endif
