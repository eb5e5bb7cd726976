#pragma once

// Frequencies throughout the library are ordinary frequencies (cycles per second).
// Energies of a mode are therefore h*f, never hbar*f.

namespace sbsq::constants {

inline constexpr double planck = 6.62607015e-34;     // J s
inline constexpr double boltzmann = 1.380649e-23;    // J / K
inline constexpr double pi = 3.14159265358979323846;

}  // namespace sbsq::constants
