#ifndef SPINEVO_EVOLUTION_HPP
#define SPINEVO_EVOLUTION_HPP

#include <vector>

// Closed-form survival element <-1| rho(t) |-1>:
//
//   rho(t) = exp(-2 g t) [1 - (k^2/2) C]
//          + k^2/(delta pi w0^2 t) (A(t) sin(w0 t) + B(t) cos(w0 t))
//          - exp(-delta t) k^2 / delta^2,
//
// with k = gamma_N H_1, g = gamma_-1, C the second-order constant, and A, B
// exponential-weight integrals of rational kernels in a = w0 t, b = (w0/delta)^2.

namespace spinevo {

struct EvolutionParams {
    double gamma_minus1 = 0.0; // [s^-1]
    double kappa = 0.0;        // gamma_N * H_1 [rad s^-1]
    double omega0 = 0.0;       // Delta E_23 [rad s^-1]
    double delta = 0.0;        // line half-width [rad s^-1]
};

struct KernelEvaluation {
    double t = 0.0;
    double a_val = 0.0; // omega0 * t
    double b_val = 0.0; // (omega0 / delta)^2
    double d_min = 0.0; // minimum of D(xi) over the quadrature nodes
};

struct KernelAB {
    double a = 0.0; // A(t)
    double b = 0.0; // B(t)
    KernelEvaluation eval;
};

struct EvolutionSeries {
    std::vector<double> times;
    std::vector<double> rho_complete;
    std::vector<double> rho_markov;
};

// Rational kernel pieces, exposed for integrand-level tests.
double kernel_denominator(double xi, double a, double b);  // D(xi)
double kernel_integrand_a(double xi, double a, double b);  // R_A
double kernel_integrand_b(double xi, double a, double b);  // R_B

double markov_term(double t, double gamma_minus1);

/// int_0^inf f/(w - w0 - i eps)^2 dw + c.c.
///   = -(2 delta + pi w0 + 2 w0 arctan(w0/delta)) / (pi delta^2 w0); always negative.
double second_order_constant(double omega0, double delta);

/// Gauss-Laguerre with node doubling (16..512) to relative 1e-8, adaptive
/// fallback on [0, 50].  Throws spinevo::numeric_error if D(xi) loses
/// positivity or neither scheme converges.
KernelAB kernel_AB(double t, double omega0, double delta);

/// Complete survival element.  For t below t_min = 1e-3/omega0 the analytic
/// t=0 value (1) is linearly bridged to the value at t_min.
double rho_element(double t, const EvolutionParams& p);

/// Per-point rho_element and markov_term over a strictly increasing grid.
EvolutionSeries evolve_series(const std::vector<double>& grid, const EvolutionParams& p);

} // namespace spinevo

#endif
