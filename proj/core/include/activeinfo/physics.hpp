#pragma once

#include <array>

namespace activeinfo::physics {

/// SI constants used by the reference computations.
struct PhysicalConstants {
  double gas_constant;        // R, J/(mol K)
  double gravity;             // g, m/s^2
  double molar_mass_air;      // M, kg/mol
  double boltzmann;           // k, m^2 kg s^-2 K^-1
};

inline constexpr PhysicalConstants kReferenceConstants{
    8.3144598,
    9.80665,
    0.0289644,
    1.38064852e-23,
};

using Velocity = std::array<double, 3>;

/// P(h) / P0 = exp(-g M h / (R T)) for an isothermal atmosphere.
/// Requires h >= 0 and T > 0 (InvalidParameter otherwise).
double barometric_pressure_ratio(double height_m, double temperature_k);
double barometric_pressure_ratio(double height_m, double temperature_k,
                                 const PhysicalConstants& constants);

/// Mean of the exponential height law matching the barometric formula, R T / (g M).
double barometric_scale_height(double temperature_k,
                               const PhysicalConstants& constants = kReferenceConstants);

/// (m / (2 pi k T))^(3/2) exp(-m v.v / (2 k T)). Requires m > 0 and T > 0.
double maxwell_boltzmann_density(const Velocity& v, double mass_kg, double temperature_k);
double maxwell_boltzmann_density(const Velocity& v, double mass_kg, double temperature_k,
                                 const PhysicalConstants& constants);

/// Variance k T / m of each velocity component.
double maxwell_boltzmann_component_variance(double mass_kg, double temperature_k,
                                            const PhysicalConstants& constants = kReferenceConstants);

}  // namespace activeinfo::physics
