// Physical constants (SI) used at the dimensionless <-> SI boundary.
#pragma once

namespace crowsense::constants {

inline constexpr double hbar = 1.054571817e-34;  ///< reduced Planck constant [J s]
inline constexpr double k_boltzmann = 1.380649e-23;  ///< Boltzmann constant [J/K]
inline constexpr double pi = 3.141592653589793238462643383279502884;

}  // namespace crowsense::constants
