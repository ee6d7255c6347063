#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinevo/constants.hpp"
#include "spinevo/evolution.hpp"
#include "spinevo/oracle.hpp"
#include "spinevo/run_config.hpp"

#include <cmath>

using namespace spinevo;

namespace {

double closed_form_constant(double omega0, double delta)
{
    return -(2.0 * delta + k_pi * omega0 + 2.0 * omega0 * std::atan(omega0 / delta)) /
           (k_pi * delta * delta * omega0);
}

double closed_form_time_integral(double t, double omega0, double delta)
{
    const KernelAB k = kernel_AB(t, omega0, delta);
    const double a = omega0 * t;
    return 2.0 / (delta * k_pi * omega0 * omega0 * t) *
               (k.a * std::sin(a) + k.b * std::cos(a)) -
           2.0 * std::exp(-delta * t) / (delta * delta);
}

} // namespace

TEST_CASE("oracle config validation")
{
    const double d = 1.0e6;
    auto cfg = oracle::OracleConfig::defaults_for(d);
    CHECK(cfg.epsilon_ladder.size() == 3);

    cfg.epsilon_ladder = {d * 1e-3, d * 1e-2};
    CHECK_THROWS_AS(oracle::constant_integral(d, d, cfg), std::invalid_argument);
    cfg.epsilon_ladder = {d * 2.0, d * 1e-2};
    CHECK_THROWS_AS(oracle::constant_integral(d, d, cfg), std::invalid_argument);
    cfg.epsilon_ladder = {d * 1e-2};
    CHECK_THROWS_AS(oracle::constant_integral(d, d, cfg), std::invalid_argument);
}

TEST_CASE("constant integral")
{
    const double d = 1.0e6;
    const auto cfg = oracle::OracleConfig::defaults_for(d);
    for (double ratio : {1.0, 10.0, 179.0}) {
        const double v = oracle::constant_integral(ratio * d, d, cfg);
        CHECK(v == doctest::Approx(closed_form_constant(ratio * d, d)).epsilon(1e-5));
        CHECK(v < 0.0);
    }

    SUBCASE("1/delta^2 scaling at fixed ratio")
    {
        const double d2 = 2.0e6;
        const auto cfg2 = oracle::OracleConfig::defaults_for(d2);
        const double v1 = oracle::constant_integral(10.0 * d, d, cfg);
        const double v2 = oracle::constant_integral(10.0 * d2, d2, cfg2);
        CHECK(v2 == doctest::Approx(v1 / 4.0).epsilon(1e-5));
    }
}

TEST_CASE("time integral")
{
    const double d = 1.0e6;
    const auto cfg = oracle::OracleConfig::defaults_for(d);

    SUBCASE("consistency with the closed form at figure parameters")
    {
        const double omega0 = 61.69 * d; // fig3-scale ratio, keeps the run fast
        for (double t : {3.0e-7, 1.0e-6, 3.0e-6}) {
            const double v = oracle::time_integral(t, omega0, d, cfg);
            const double cf = closed_form_time_integral(t, omega0, d);
            CHECK(std::abs(v - cf) < 1e-5 * std::max(std::abs(v), std::abs(cf)));
        }
    }

    SUBCASE("t -> 0 continuity")
    {
        const double omega0 = 10.0 * d;
        const double c0 = oracle::constant_integral(omega0, d, cfg);
        const double ct = oracle::time_integral(1.0e-11, omega0, d, cfg);
        CHECK(ct == doctest::Approx(c0).epsilon(1e-4));
    }

    SUBCASE("residue term negligible for delta t >> 1")
    {
        const double omega0 = 5.0 * d;
        const double t = 25.0 / d;
        const double v = oracle::time_integral(t, omega0, d, cfg);
        const KernelAB k = kernel_AB(t, omega0, d);
        const double a = omega0 * t;
        const double osc = 2.0 / (d * k_pi * omega0 * omega0 * t) *
                           (k.a * std::sin(a) + k.b * std::cos(a));
        CHECK(std::abs(v - osc) < 1e-5 * std::abs(osc));
    }

    CHECK_THROWS_AS(oracle::time_integral(-1.0, d, d, cfg), std::domain_error);
}

TEST_CASE("kernel reference")
{
    SUBCASE("b -> 0 still converges")
    {
        const auto ref = oracle::kernel_reference(2.0, 1.0e-12);
        CHECK(std::isfinite(ref.a_ref));
        CHECK(std::isfinite(ref.b_ref));
    }
    SUBCASE("weight bound on A")
    {
        for (double a : {0.5, 2.0, 30.0})
            for (double b : {0.5, 10.0}) {
                const auto ref = oracle::kernel_reference(a, b);
                double max_ra = 0.0;
                for (int i = 0; i <= 2000; ++i)
                    max_ra = std::max(max_ra, std::abs(kernel_integrand_a(i * 0.02, a, b)));
                CHECK(std::abs(ref.a_ref) <= max_ra * (1.0 + 1e-9));
            }
    }
    CHECK_THROWS_AS(oracle::kernel_reference(0.0, 1.0), std::domain_error);
}

TEST_CASE("rho reference")
{
    const ResolvedRun run = resolve(preset("fig3a"));
    const auto cfg = oracle::OracleConfig::defaults_for(run.config.delta);

    SUBCASE("t = 0 cancellation realized numerically")
    {
        CHECK(oracle::rho_reference(0.0, run.evolution, cfg) ==
              doctest::Approx(1.0).epsilon(1e-4));
    }

    SUBCASE("kappa = 0 is exactly 1")
    {
        EvolutionParams p = run.evolution;
        p.kappa = 0.0;
        p.gamma_minus1 = 0.0;
        for (double t : {0.0, 1.0e-6, 1.0e-3})
            CHECK(oracle::rho_reference(t, p, cfg) == 1.0);
    }

    SUBCASE("matches rho_element at sampled times")
    {
        for (double frac : {0.05, 0.3, 1.0}) {
            const double t = frac * run.t_end;
            const double ref = oracle::rho_reference(t, run.evolution, cfg);
            const double val = rho_element(t, run.evolution);
            CHECK(std::abs(val - ref) < 1e-4 * std::max(std::abs(val), std::abs(ref)));
        }
    }
}
