#include "spinevo/spin_model.hpp"
#include "spinevo/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace spinevo {

Nucleus Nucleus::hydrogen() { return {"H1", 2.7927, 0.5}; }
Nucleus Nucleus::carbon13() { return {"C13", 0.702381, 0.5}; }

double gyromagnetic_ratio(const Nucleus& nucleus)
{
    return nucleus.mu * k_nuclear_magneton / (nucleus.spin * k_hbar);
}

GeometricFactors geometric_factors(const SpinGeometry& g)
{
    if (g.r <= 0.0)
        throw std::domain_error("geometric_factors: r must be positive");
    const double r3 = 1.0 / (g.r * g.r * g.r);
    const double st = std::sin(g.theta);
    const double ct = std::cos(g.theta);
    GeometricFactors f;
    f.y0 = r3 * (1.0 - 3.0 * ct * ct);
    f.y1 = r3 * st * ct * std::exp(std::complex<double>(0.0, -g.phi));
    f.y2 = r3 * st * st * std::exp(std::complex<double>(0.0, -2.0 * g.phi));
    return f;
}

Eigen::Matrix4d zeeman_matrix(double gamma_n, double h_z)
{
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = -gamma_n * h_z;
    m(2, 2) = gamma_n * h_z;
    return m;
}

Eigen::Matrix4cd dipolar_matrix(double gamma_n, const SpinGeometry& g)
{
    const GeometricFactors f = geometric_factors(g);
    const double pref = 0.25 * gamma_n * gamma_n * k_hbar;
    const double s2 = std::sqrt(2.0);

    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = f.y0;
    m(0, 1) = -3.0 * s2 * f.y1;
    m(0, 2) = -3.0 * f.y2;
    m(1, 0) = -3.0 * s2 * std::conj(f.y1);
    m(1, 1) = -2.0 * f.y0;
    m(1, 2) = 3.0 * s2 * f.y1;
    m(2, 0) = -3.0 * std::conj(f.y2);
    m(2, 1) = 3.0 * s2 * std::conj(f.y1);
    m(2, 2) = f.y0;
    return pref * m;
}

Eigen::Matrix4cd rf_matrix(double gamma_n, double h_1, double omega, double t)
{
    const std::complex<double> up = std::exp(std::complex<double>(0.0, omega * t));
    const std::complex<double> dn = std::conj(up);
    const double pref = -gamma_n * h_1 / std::sqrt(2.0);

    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 1) = up;
    m(1, 0) = dn;
    m(1, 2) = up;
    m(2, 1) = dn;
    return pref * m;
}

SpectrumReport spectrum(const Nucleus& nucleus, const SpinGeometry& g, const FieldConfig& f)
{
    const double gamma_n = gyromagnetic_ratio(nucleus);
    const GeometricFactors gf = geometric_factors(g);
    const double dip_y0 = gamma_n * gamma_n * k_hbar * gf.y0;

    SpectrumReport rep;
    rep.gamma_n = gamma_n;
    rep.dip = gamma_n * gamma_n * k_hbar / (g.r * g.r * g.r);
    rep.e1 = -gamma_n * f.h_z + 0.25 * dip_y0;
    rep.e2 = -0.5 * dip_y0;
    rep.e3 = gamma_n * f.h_z + 0.25 * dip_y0;
    rep.e4 = 0.0;
    // Closed transition-energy formulas; equality with E2-E1 and E3-E2 is a
    // tested invariant.
    const double dip_term =
        0.75 * gamma_n * k_hbar / (g.r * g.r * g.r) * (3.0 * std::pow(std::cos(g.theta), 2) - 1.0);
    rep.de12 = gamma_n * (f.h_z + dip_term);
    rep.de23 = gamma_n * (f.h_z - dip_term);
    return rep;
}

} // namespace spinevo
