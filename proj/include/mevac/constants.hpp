#pragma once

// Physical constants, Gaussian (CGS) units.

namespace mevac::constants {

/// Speed of light in vacuum [cm/s].
inline constexpr double c = 2.99792458e10;

/// Reduced Planck constant [erg s].
inline constexpr double hbar = 1.054571817e-27;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace mevac::constants
