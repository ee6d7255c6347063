#ifndef SPINEVO_ORACLE_HPP
#define SPINEVO_ORACLE_HPP

#include "spinevo/evolution.hpp"

#include <vector>

// Brute-force re-derivation of every closed-form integral used by the
// evolution kernel.  Two mutually independent routes are evaluated on every
// call: epsilon-regularized quadrature on the real axis (extrapolated
// eps -> 0) and quadrature on the contour rotated to the negative imaginary
// axis.  Disagreement beyond rel_tol is an error, never silently averaged.
// Slow by design; test/diagnostic use only.

namespace spinevo::oracle {

struct OracleConfig {
    std::vector<double> epsilon_ladder; // decreasing, all << delta [rad s^-1]
    double abs_tol = 1.0e-13;
    double rel_tol = 1.0e-5;
    int max_panels = 4000;

    static OracleConfig defaults_for(double delta);
};

/// int_0^inf f(w) exp(-i(w-w0)t) / (w - w0 - i eps)^2 dw + c.c., eps -> 0.
/// t = 0 reduces to constant_integral (both routes still evaluated).
double time_integral(double t, double omega0, double delta, const OracleConfig& cfg);

/// The t = 0 integral; matches the arctan closed form.
double constant_integral(double omega0, double delta, const OracleConfig& cfg);

struct KernelReference {
    double a_ref = 0.0;
    double b_ref = 0.0;
};

/// A(t), B(t) by adaptive panels on [0, xi_max], independent of Gauss-Laguerre.
KernelReference kernel_reference(double a, double b);

/// <-1|rho(t)|-1> assembled from the pre-contour expression, bypassing the
/// A/B closed forms entirely.
double rho_reference(double t, const EvolutionParams& p, const OracleConfig& cfg);

} // namespace spinevo::oracle

#endif
