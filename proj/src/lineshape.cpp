#include "spinevo/lineshape.hpp"
#include "spinevo/constants.hpp"
#include "spinevo/errors.hpp"
#include "spinevo/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace spinevo {

double lorentzian(double omega, const LineshapeParams& p)
{
    if (p.delta <= 0.0)
        throw std::domain_error("lorentzian: delta must be positive");
    const double d = omega - p.omega0;
    return (p.delta / k_pi) / (p.delta * p.delta + d * d);
}

double decay_rate(double gamma_n, double h_1, const LineshapeParams& p)
{
    if (p.delta <= 0.0)
        throw std::domain_error("decay_rate: delta must be positive");
    // (1/2) pi (gamma_n H_1)^2 f(omega0), f(omega0) = 1/(pi delta)
    const double kappa = gamma_n * h_1;
    return kappa * kappa / (2.0 * p.delta);
}

double rate_w(double gamma_n, double h_1, double f_value, int m)
{
    if (m != -1 && m != 0)
        throw std::domain_error("rate_w: spin projection m must be -1 or 0");
    constexpr double spin_total = 1.0;
    const double coeff = (spin_total + m + 1.0) * (spin_total - m);
    return 0.5 * k_pi * gamma_n * gamma_n * h_1 * h_1 * coeff * f_value;
}

double renormalized_energy(double e3, double gamma_n, double h_1,
                           const LineshapeParams& p, double omega_pole)
{
    if (p.delta <= 0.0)
        throw std::domain_error("renormalized_energy: delta must be positive");
    const double kappa2 = gamma_n * gamma_n * h_1 * h_1;
    if (kappa2 == 0.0)
        return e3;

    // Fold the two half-axes about the pole so the integrand is regular:
    //   PV int g^2/(w - pole) dw = int_0^inf [f(pole + x) - f(pole - x)] / x dx.
    const double reach = 5.0e3 * p.delta + std::abs(p.omega0 - omega_pole);
    auto folded = [&](double x) {
        return (lorentzian(omega_pole + x, p) - lorentzian(omega_pole - x, p)) / x;
    };

    std::vector<double> etas = {p.delta / 10.0, p.delta / 20.0, p.delta / 40.0};
    std::vector<double> vals;
    for (const double eta : etas) {
        const std::vector<double> brk = {eta, p.delta, 10.0 * p.delta, reach};
        vals.push_back(quad::integrate_panels(folded, brk, 1.0e-14 / p.delta, 1.0e-10));
    }
    const double pv = quad::extrapolate_to_zero(etas, vals);
    return e3 - 0.5 * kappa2 * pv;
}

double negative_frequency_mass(const LineshapeParams& p)
{
    if (p.delta <= 0.0)
        throw std::domain_error("negative_frequency_mass: delta must be positive");
    return 0.5 - std::atan(p.omega0 / p.delta) / k_pi;
}

} // namespace spinevo
