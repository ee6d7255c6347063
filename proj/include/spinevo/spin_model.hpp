#ifndef SPINEVO_SPIN_MODEL_HPP
#define SPINEVO_SPIN_MODEL_HPP

#include <Eigen/Dense>

#include <complex>
#include <string>

// Two spin-1/2 nuclei in a static field H_z along z plus a rotating field H_1
// in the xy plane.  Matrices are written in the coupled basis
// (phi_1, phi_2, phi_3, phi_4) = (aa, (ab+ba)/sqrt2, bb, (ab-ba)/sqrt2);
// the singlet phi_4 carries zero total spin and decouples everywhere.

namespace spinevo {

struct Nucleus {
    std::string name;
    double mu = 0.0;   // magnetic moment [nuclear magnetons]
    double spin = 0.5; // per nucleus

    static Nucleus hydrogen();  // H(1),  mu = 2.7927
    static Nucleus carbon13();  // C(13), mu = 0.702381
};

struct SpinGeometry {
    double r = 0.0;     // internuclear distance [cm]
    double theta = 0.0; // polar angle [rad]
    double phi = 0.0;   // azimuthal angle [rad]
};

struct FieldConfig {
    double h_z = 0.0; // static field [G]
    double h_1 = 0.0; // rotating field amplitude [G]
};

struct GeometricFactors {
    double y0 = 0.0;               // r^-3 (1 - 3 cos^2 theta)        [cm^-3]
    std::complex<double> y1{0, 0}; // r^-3 sin cos theta e^{-i phi}   [cm^-3]
    std::complex<double> y2{0, 0}; // r^-3 sin^2 theta e^{-2i phi}    [cm^-3]
};

struct SpectrumReport {
    double gamma_n = 0.0; // gyromagnetic ratio [rad s^-1 G^-1]
    double dip = 0.0;     // gamma_n^2 hbar / r^3 [rad s^-1]
    double e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 0.0; // [rad s^-1]
    double de12 = 0.0, de23 = 0.0;                 // transition energies [rad s^-1]
};

/// gamma_N = mu * mu_N / (I * hbar), I = 1/2.
double gyromagnetic_ratio(const Nucleus& nucleus);

/// Throws std::domain_error if r <= 0.
GeometricFactors geometric_factors(const SpinGeometry& g);

/// -gamma_N H_z diag(1, 0, -1, 0).
Eigen::Matrix4d zeeman_matrix(double gamma_n, double h_z);

/// Full dipolar matrix (hbar gamma_N^2 / 4) in (Y0, Y1, Y2), row/col 4 zero.
Eigen::Matrix4cd dipolar_matrix(double gamma_n, const SpinGeometry& g);

/// Tridiagonal rotating-field coupling with phases exp(+-i omega t).
Eigen::Matrix4cd rf_matrix(double gamma_n, double h_1, double omega, double t);

/// Energy levels and transition energies in the diagonal (secular) approximation.
SpectrumReport spectrum(const Nucleus& nucleus, const SpinGeometry& g, const FieldConfig& f);

} // namespace spinevo

#endif
