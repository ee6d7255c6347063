#ifndef SPINEVO_CONSTANTS_HPP
#define SPINEVO_CONSTANTS_HPP

// Gaussian-CGS constants.  Energies throughout the library are expressed as
// angular frequencies [rad s^-1]; fields in Gauss (Oe taken as numerically
// identical in vacuum), lengths in cm.

namespace spinevo {

inline constexpr double k_nuclear_magneton = 5.0507837e-24; // erg G^-1
inline constexpr double k_hbar             = 1.0545718e-27; // erg s

inline constexpr double k_pi = 3.14159265358979323846;

} // namespace spinevo

#endif
