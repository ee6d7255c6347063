#include "spinevo/quadrature.hpp"
#include "spinevo/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace spinevo::quad {

namespace {

GaussLaguerreRule build_gauss_laguerre(int n)
{
    // Jacobi matrix of the monic Laguerre recurrence: alpha_k = 2k+1,
    // sqrt(beta_k) = k.  Eigenvalues are the nodes, weights follow from the
    // first eigenvector components (mu0 = integral of exp(-x) = 1).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        jacobi(k, k) = 2.0 * k + 1.0;
        if (k + 1 < n) {
            jacobi(k, k + 1) = k + 1.0;
            jacobi(k + 1, k) = k + 1.0;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success)
        throw numeric_error("gauss_laguerre: eigensolver failed for n=" + std::to_string(n));

    GaussLaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = solver.eigenvalues()(k);
        const double v0 = solver.eigenvectors()(0, k);
        rule.weights[k] = v0 * v0;
    }
    return rule;
}

// QUADPACK dqk15 abscissae/weights on [-1, 1].
constexpr double kronrod_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kronrod_w[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double gauss_w[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GK15 {
    double value;
    double error;
};

GK15 gk15(const std::function<double(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kronrod_x[i]);
        fv[14 - i] = f(c + h * kronrod_x[i]);
    }
    fv[7] = f(c);

    double kron = 0.0;
    for (int i = 0; i < 7; ++i)
        kron += kronrod_w[i] * (fv[i] + fv[14 - i]);
    kron += kronrod_w[7] * fv[7];
    kron *= h;

    double gauss = gauss_w[3] * fv[7];
    for (int i = 0; i < 3; ++i)
        gauss += gauss_w[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    gauss *= h;

    return {kron, std::abs(kron - gauss)};
}

void adapt(const std::function<double(double)>& f, double a, double b, double abs_tol,
           double rel_tol, int depth, PanelResult& acc)
{
    const GK15 est = gk15(f, a, b);
    const double tol = std::max(abs_tol, rel_tol * std::abs(est.value));
    if (est.error <= tol || depth <= 0) {
        acc.value += est.value;
        acc.error += est.error;
        if (est.error > tol)
            acc.converged = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * abs_tol, rel_tol, depth - 1, acc);
    adapt(f, mid, b, 0.5 * abs_tol, rel_tol, depth - 1, acc);
}

} // namespace

const GaussLaguerreRule& gauss_laguerre(int n)
{
    static std::map<int, GaussLaguerreRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_gauss_laguerre(n)).first;
    return it->second;
}

PanelResult adaptive_panel(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, double rel_tol, int max_depth)
{
    PanelResult acc;
    if (a == b)
        return acc;
    adapt(f, a, b, abs_tol, rel_tol, max_depth, acc);
    return acc;
}

double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& breakpoints,
                        double abs_tol, double rel_tol)
{
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const PanelResult r =
            adaptive_panel(f, breakpoints[i], breakpoints[i + 1], abs_tol, rel_tol);
        if (!r.converged) {
            std::ostringstream msg;
            msg << "integrate_panels: no convergence on [" << breakpoints[i] << ", "
                << breakpoints[i + 1] << "], residual " << r.error;
            throw numeric_error(msg.str());
        }
        total += r.value;
    }
    return total;
}

double extrapolate_to_zero(const std::vector<double>& x, const std::vector<double>& y)
{
    // Neville tableau evaluated at 0.
    std::vector<double> p = y;
    const std::size_t n = x.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = 0; i + level < n; ++i)
            p[i] = (x[i + level] * p[i] - x[i] * p[i + 1]) / (x[i + level] - x[i]);
    return p[0];
}

} // namespace spinevo::quad
