#pragma once

// Physical constants (CODATA 2018). Fixed; never user-configurable.
namespace cramsim::consts {

inline constexpr double k_b     = 1.380649e-23;      // Boltzmann constant [J/K]
inline constexpr double mu0     = 1.25663706212e-6;  // vacuum permeability [T·m/A]
inline constexpr double gamma_e = 1.76085963023e11;  // electron gyromagnetic ratio [rad/(s·T)]
inline constexpr double hbar    = 1.054571817e-34;   // reduced Planck constant [J·s]
inline constexpr double e_charge = 1.602176634e-19;  // elementary charge [C]

inline constexpr double pi = 3.14159265358979323846;

}  // namespace cramsim::consts
