// constants.hpp — CODATA physical constants and atomic masses (SI units)

#pragma once

namespace coldeco::constants {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double boltzmann = 1.380649e-23;         // J/K
inline constexpr double bohr_radius = 5.29177210903e-11;  // m
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

// Isotope masses (AME relative masses times u)
inline constexpr double mass_na23 = 22.98976928 * atomic_mass_unit;    // kg
inline constexpr double mass_rb87 = 86.909180527 * atomic_mass_unit;   // kg

} // namespace coldeco::constants
