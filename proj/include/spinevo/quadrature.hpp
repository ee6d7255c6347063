#ifndef SPINEVO_QUADRATURE_HPP
#define SPINEVO_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace spinevo::quad {

/// Nodes and weights for integrating f against the weight exp(-x) on [0, inf).
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub-Welsch rule of order n.  Rules are cached; repeated lookups are cheap.
const GaussLaguerreRule& gauss_laguerre(int n);

struct PanelResult {
    double value = 0.0;
    double error = 0.0; // accumulated estimate
    bool converged = true;
};

/// Adaptive Gauss-Kronrod 15(7) bisection on [a, b].
/// Does not throw on non-convergence; check `converged`.
PanelResult adaptive_panel(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, double rel_tol, int max_depth = 40);

/// Adaptive integral over an ordered sequence of breakpoints; throws
/// spinevo::numeric_error if any panel fails to converge.
double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& breakpoints,
                        double abs_tol, double rel_tol);

/// Polynomial extrapolation to x = 0 through the points (x[i], y[i])
/// (Neville's scheme, exact-degree fit).
double extrapolate_to_zero(const std::vector<double>& x, const std::vector<double>& y);

} // namespace spinevo::quad

#endif
