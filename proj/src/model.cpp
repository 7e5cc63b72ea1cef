#include "permeaflow/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace permeaflow {

void PhysicalParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw ConfigError(std::string(name) + " must be positive");
  };
  positive(Re, "Re");
  positive(Ca, "Ca");
  positive(Pe, "Pe");
  positive(epsilon, "epsilon");
  positive(mobility, "mobility");
  positive(D_plus, "D_plus");
  positive(D_minus, "D_minus");
  if (!(K >= 0.0)) throw ConfigError("K must be nonnegative");
  if (!(s >= 0.0)) throw ConfigError("s must be nonnegative");
}

double q_of_c(double c, FluxLaw law) {
  switch (law) {
    case FluxLaw::Linear: return 1.0;
    case FluxLaw::Logarithmic:
      if (!(c > 0.0)) throw ConfigError("q_of_c: logarithmic law requires c > 0");
      return 1.0 / c;
  }
  return 1.0;
}

double q_of_c_safe(double c, FluxLaw law) { return q_of_c(std::max(c, 1e-12), law); }

double effective_diffusivity(double phi, double q, const PhysicalParams& p, double A) {
  if (!(q > 0.0)) throw ConfigError("effective_diffusivity: q must be positive");
  const double ph = std::clamp(phi, -1.0, 1.0);
  const double w = (1.0 - ph * ph) * (1.0 - ph * ph);
  double inv = (1.0 - ph) / (2.0 * p.D_minus) + (1.0 + ph) / (2.0 * p.D_plus);
  if (w > 0.0) {
    if (p.K == 0.0) return 0.0;  // impermeable membrane
    inv += w / (A * p.K * q * p.epsilon);
  }
  return 1.0 / inv;
}

double tanh_profile(double signed_distance, double epsilon) {
  if (!(epsilon > 0.0)) throw ConfigError("tanh_profile: epsilon must be positive");
  return std::tanh(signed_distance / (std::sqrt(2.0) * epsilon));
}

double double_well_prime(double phi) { return phi * (phi * phi - 1.0); }

double double_well(double phi) {
  const double a = 1.0 - phi * phi;
  return 0.25 * a * a;
}

}  // namespace permeaflow
