#pragma once

// Physical constants (CODATA 2018 exact values, SI).

namespace coldlink::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double planck = 6.62607015e-34;          // J s
inline constexpr double hbar = planck / two_pi;           // J s
inline constexpr double boltzmann = 1.380649e-23;         // J/K
inline constexpr double speed_of_light = 299792458.0;     // m/s
inline constexpr double electron_charge = 1.602176634e-19;// C

// Magnetic flux quantum h/2e and its reduced form hbar/2e.
inline constexpr double flux_quantum = planck / (2.0 * electron_charge);
inline constexpr double reduced_flux_quantum = hbar / (2.0 * electron_charge);

} // namespace coldlink::constants
