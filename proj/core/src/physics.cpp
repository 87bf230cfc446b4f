#include "activeinfo/physics.hpp"

#include <cmath>
#include <numbers>

#include "activeinfo/error.hpp"

namespace activeinfo::physics {
namespace {

void require_temperature(double t) {
  if (!std::isfinite(t) || !(t > 0.0)) throw InvalidParameter("temperature must be > 0 K");
}

}  // namespace

double barometric_pressure_ratio(double height_m, double temperature_k) {
  return barometric_pressure_ratio(height_m, temperature_k, kReferenceConstants);
}

double barometric_pressure_ratio(double height_m, double temperature_k,
                                 const PhysicalConstants& c) {
  if (!std::isfinite(height_m) || !(height_m >= 0.0)) throw InvalidParameter("height must be >= 0 m");
  require_temperature(temperature_k);
  return std::exp(-c.gravity * c.molar_mass_air * height_m / (c.gas_constant * temperature_k));
}

double barometric_scale_height(double temperature_k, const PhysicalConstants& c) {
  require_temperature(temperature_k);
  return c.gas_constant * temperature_k / (c.gravity * c.molar_mass_air);
}

double maxwell_boltzmann_density(const Velocity& v, double mass_kg, double temperature_k) {
  return maxwell_boltzmann_density(v, mass_kg, temperature_k, kReferenceConstants);
}

double maxwell_boltzmann_density(const Velocity& v, double mass_kg, double temperature_k,
                                 const PhysicalConstants& c) {
  if (!std::isfinite(mass_kg) || !(mass_kg > 0.0)) throw InvalidParameter("particle mass must be > 0 kg");
  require_temperature(temperature_k);
  for (double vi : v) {
    if (!std::isfinite(vi)) throw InvalidParameter("velocity component is not finite");
  }
  const double kt = c.boltzmann * temperature_k;
  const double speed_sq = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  return std::pow(mass_kg / (2.0 * std::numbers::pi * kt), 1.5) *
         std::exp(-mass_kg * speed_sq / (2.0 * kt));
}

double maxwell_boltzmann_component_variance(double mass_kg, double temperature_k,
                                            const PhysicalConstants& c) {
  if (!std::isfinite(mass_kg) || !(mass_kg > 0.0)) throw InvalidParameter("particle mass must be > 0 kg");
  require_temperature(temperature_k);
  return c.boltzmann * temperature_k / mass_kg;
}

}  // namespace activeinfo::physics
