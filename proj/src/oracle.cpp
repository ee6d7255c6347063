#include "spinevo/oracle.hpp"
#include "spinevo/constants.hpp"
#include "spinevo/errors.hpp"
#include "spinevo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

// All internals work in the dimensionless variables x = (w - w0)/delta,
// s = delta t, W = w0/delta, e = eps/delta; results carry 1/delta^2.

namespace spinevo::oracle {

namespace {

// Panel tolerances for the real-axis route; values are O(1) after the
// dimensionless rescaling.
constexpr double k_panel_abs = 1.0e-13;
constexpr double k_panel_rel = 1.0e-11;

std::vector<double> real_axis_breakpoints(double big_w, double e, double s)
{
    const double x_max = (s >= 0.2) ? 300.0 : 1000.0;
    std::vector<double> pts = {-big_w, -1.0, -10.0 * e, 10.0 * e, 1.0};
    // Split the oscillatory stretch at the cosine half-periods.
    const double step = (s > 0.0) ? std::max(k_pi / s, 0.05) : x_max;
    double x = 1.0;
    while (x < x_max) {
        x = std::min(x + step, x_max);
        pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // Clamp to the physical lower limit w = 0.
    while (pts.size() > 1 && pts[1] <= -big_w)
        pts.erase(pts.begin() + 1);
    pts.front() = -big_w;
    return pts;
}

// One epsilon member of the ladder, on the real axis.
double real_axis_value(double big_w, double s, double e)
{
    auto integrand = [=](double x) {
        const double x2 = x * x, e2 = e * e;
        const double core =
            2.0 * ((x2 - e2) * std::cos(x * s) + 2.0 * e * x * std::sin(x * s)) /
            ((x2 + e2) * (x2 + e2));
        return (1.0 / k_pi) / (1.0 + x2) * core;
    };
    return quad::integrate_panels(integrand, real_axis_breakpoints(big_w, e, s),
                                  k_panel_abs, k_panel_rel);
}

double eps_ladder_value(double big_w, double s, double delta, const OracleConfig& cfg)
{
    std::vector<double> es, vals;
    for (const double eps : cfg.epsilon_ladder) {
        es.push_back(eps / delta);
        vals.push_back(real_axis_value(big_w, s, eps / delta));
    }
    return quad::extrapolate_to_zero(es, vals);
}

// Contour rotated onto the negative imaginary axis, t > 0 (xi = y t).
double rotated_value(double big_w, double s)
{
    auto u_at = [=](double xi) { return std::complex<double>(big_w, xi / s); };
    auto integrand = [=](double xi) {
        const std::complex<double> u = u_at(xi);
        return std::exp(-xi) / ((1.0 + u * u) * (u * u));
    };
    const std::vector<double> brk = {0.0, 1.0, 5.0, 40.0};
    const double re =
        quad::integrate_panels([&](double xi) { return integrand(xi).real(); }, brk,
                               1.0e-16, 1.0e-12);
    const double im =
        quad::integrate_panels([&](double xi) { return integrand(xi).imag(); }, brk,
                               1.0e-16, 1.0e-12);
    const std::complex<double> phase(0.0, big_w * s); // i * a
    const std::complex<double> val =
        std::complex<double>(0.0, -1.0) * std::exp(phase) *
        std::complex<double>(re, im) / (k_pi * s);
    return 2.0 * val.real() - 2.0 * std::exp(-s);
}

// Rotated contour at t = 0 (variable y directly, integrand ~ 1/y^4).
double rotated_constant(double big_w)
{
    auto integrand = [=](double v) {
        const std::complex<double> u(big_w, v);
        return (std::complex<double>(0.0, -1.0) / ((1.0 + u * u) * (u * u))).real();
    };
    const std::vector<double> brk = {0.0, 1.0, 10.0, 100.0, 2000.0};
    const double val = quad::integrate_panels(integrand, brk, 1.0e-14, 1.0e-12);
    return 2.0 * val / k_pi - 2.0;
}

void require_agreement(const char* where, double primary, double check, double rel_tol)
{
    const double scale = std::max(std::abs(primary), std::abs(check));
    if (std::abs(primary - check) > rel_tol * scale + 1.0e-9) {
        std::ostringstream msg;
        msg << where << ": oracle routes disagree; eps-route=" << primary
            << " rotated-route=" << check;
        throw numeric_error(msg.str());
    }
}

void validate(double omega0, double delta, const OracleConfig& cfg)
{
    if (omega0 <= 0.0 || delta <= 0.0)
        throw std::domain_error("oracle: omega0 and delta must be positive");
    if (cfg.epsilon_ladder.size() < 2)
        throw std::invalid_argument("oracle: epsilon ladder needs at least two rungs");
    for (std::size_t i = 0; i + 1 < cfg.epsilon_ladder.size(); ++i)
        if (!(cfg.epsilon_ladder[i] > cfg.epsilon_ladder[i + 1]))
            throw std::invalid_argument("oracle: epsilon ladder must be strictly decreasing");
    if (cfg.epsilon_ladder.front() >= delta)
        throw std::invalid_argument("oracle: epsilon ladder must sit well below delta");
}

} // namespace

OracleConfig OracleConfig::defaults_for(double delta)
{
    OracleConfig cfg;
    cfg.epsilon_ladder = {delta * 1.0e-2, delta * 1.0e-3, delta * 1.0e-4};
    return cfg;
}

double constant_integral(double omega0, double delta, const OracleConfig& cfg)
{
    validate(omega0, delta, cfg);
    const double big_w = omega0 / delta;
    const double primary = eps_ladder_value(big_w, 0.0, delta, cfg);
    const double check = rotated_constant(big_w);
    require_agreement("constant_integral", primary, check, cfg.rel_tol);
    return primary / (delta * delta);
}

double time_integral(double t, double omega0, double delta, const OracleConfig& cfg)
{
    validate(omega0, delta, cfg);
    if (t < 0.0)
        throw std::domain_error("time_integral: t must be non-negative");
    if (t == 0.0)
        return constant_integral(omega0, delta, cfg);

    const double big_w = omega0 / delta;
    const double s = delta * t;
    const double primary = eps_ladder_value(big_w, s, delta, cfg);
    const double check = rotated_value(big_w, s);
    require_agreement("time_integral", primary, check, cfg.rel_tol);
    return primary / (delta * delta);
}

KernelReference kernel_reference(double a, double b)
{
    if (a <= 0.0 || b < 0.0)
        throw std::domain_error("kernel_reference: need a > 0, b >= 0");
    constexpr double xi_max = 37.0; // exp(-37) < 1e-16

    std::vector<double> pts = {0.0, 1.0e-2 * a, 0.1 * a, a, 10.0 * a, 1.0, 5.0, xi_max};
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [](double x) { return x < 0.0 || x > xi_max; }),
              pts.end());

    KernelReference out;
    out.a_ref = quad::integrate_panels(
        [=](double xi) { return std::exp(-xi) * kernel_integrand_a(xi, a, b); }, pts,
        1.0e-20, 1.0e-9);
    out.b_ref = quad::integrate_panels(
        [=](double xi) { return std::exp(-xi) * kernel_integrand_b(xi, a, b); }, pts,
        1.0e-20, 1.0e-9);
    return out;
}

double rho_reference(double t, const EvolutionParams& p, const OracleConfig& cfg)
{
    if (t < 0.0)
        throw std::domain_error("rho_reference: t must be non-negative");
    if (p.kappa == 0.0)
        return markov_term(t, p.gamma_minus1);

    const double kappa2 = p.kappa * p.kappa;
    const double markov = markov_term(t, p.gamma_minus1);

    if (t == 0.0) {
        // Realize the cancellation numerically: second-order constant from the
        // eps ladder against the t -> 0 memory term from the rotated contour.
        validate(p.omega0, p.delta, cfg);
        const double big_w = p.omega0 / p.delta;
        const double c_eps = eps_ladder_value(big_w, 0.0, p.delta, cfg) / (p.delta * p.delta);
        const double c_rot = rotated_constant(big_w) / (p.delta * p.delta);
        return 1.0 - 0.5 * kappa2 * c_eps + 0.5 * kappa2 * c_rot;
    }

    const double c = constant_integral(p.omega0, p.delta, cfg);
    const double mem = time_integral(t, p.omega0, p.delta, cfg);
    return markov - markov * 0.5 * kappa2 * c + 0.5 * kappa2 * mem;
}

} // namespace spinevo::oracle
