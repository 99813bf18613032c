#ifndef SSSIM_CONSTANTS_HPP
#define SSSIM_CONSTANTS_HPP

#include <numbers>

// Fundamental physical constants, CODATA 2018 exact/recommended values.
// Everything in the library works in strict SI; unit conversion happens
// only at the config-file boundary.

namespace sssim::constants {

/// π
inline constexpr double pi = std::numbers::pi_v<double>;

/// ħ — reduced Planck constant [J·s]
inline constexpr double hbar = 1.054571817e-34;

/// h — Planck constant [J·s]
inline constexpr double h = 6.62607015e-34;

/// e — elementary charge [C]
inline constexpr double e = 1.602176634e-19;

/// e* — Cooper-pair charge, 2e [C]
inline constexpr double e_star = 2.0 * e;

/// m_e — electron rest mass [kg]
inline constexpr double m_e = 9.1093837015e-31;

/// m* — default Cooper-pair mass, 2·m_e [kg]
inline constexpr double m_star_default = 2.0 * m_e;

/// k_B — Boltzmann constant [J/K]
inline constexpr double k_B = 1.380649e-23;

/// ε₀ — vacuum permittivity [F/m]
inline constexpr double eps0 = 8.8541878128e-12;

/// Φ₀ — superconducting flux quantum h/2e [Wb]
inline constexpr double Phi0 = h / e_star;

} // namespace sssim::constants

#endif
