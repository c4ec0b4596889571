#pragma once

/**
 * Physical constants (CODATA 2018 exact/recommended values), SI units.
 *
 * The material/geometry layer (physcore) works in SI with these constants;
 * the dynamics layers (cwl, sn) work in natural units (hbar = 1, rad/s) and
 * convert at their boundaries where kelvin or joules enter.
 */
namespace gravimech::constants {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double hbar = 1.054571817e-34;   // reduced Planck constant, J s
inline constexpr double G = 6.67430e-11;          // Newton constant, m^3 kg^-1 s^-2
inline constexpr double k_B = 1.380649e-23;       // Boltzmann constant, J / K
inline constexpr double amu = 1.66053906660e-27;  // atomic mass unit, kg
inline constexpr double eV = 1.602176634e-19;     // electron volt, J

}  // namespace gravimech::constants
