#ifndef SPINEVO_LINESHAPE_HPP
#define SPINEVO_LINESHAPE_HPP

namespace spinevo {

// Lorentzian line f(omega) = (delta/pi) / (delta^2 + (omega - omega0)^2).
// The squared coupling distribution g^2 is identified with f throughout.
struct LineshapeParams {
    double omega0 = 0.0; // center [rad s^-1]
    double delta = 0.0;  // half-width at half-maximum [rad s^-1]
};

double lorentzian(double omega, const LineshapeParams& p);

/// Decay rate at resonance: gamma_-1 = (gamma_n H_1)^2 / (2 delta).
double decay_rate(double gamma_n, double h_1, const LineshapeParams& p);

/// Transition rate (pi/2) gamma_n^2 H_1^2 (I+m+1)(I-m) f, with effective I = 1.
/// m must be -1 or 0; throws std::domain_error otherwise.
double rate_w(double gamma_n, double h_1, double f_value, int m);

/// Renormalized initial-state energy
///   E3 - (gamma_n^2 H_1^2 / 2) PV int g^2(omega) / (omega - omega_pole) domega,
/// where omega_pole is the transition energy E3 - E2.  The principal value is
/// taken by symmetric excision with Richardson extrapolation of the excision
/// radius (eta = delta/10, delta/20, delta/40).
double renormalized_energy(double e3, double gamma_n, double h_1,
                           const LineshapeParams& p, double omega_pole);

/// f-mass on (-inf, 0): the deficit of the half-line norm against the
/// full-line norm.  Diagnostic; approx delta / (pi omega0) for omega0 >> delta.
double negative_frequency_mass(const LineshapeParams& p);

} // namespace spinevo

#endif
