// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.  Tolerances are fixed here and are not tuning knobs.

#include "spinevo.h"
#include "spinevo/constants.hpp"
#include "spinevo/evolution.hpp"
#include "spinevo/lineshape.hpp"
#include "spinevo/oracle.hpp"
#include "spinevo/quadrature.hpp"
#include "spinevo/run_config.hpp"
#include "spinevo/spin_model.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace spinevo;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail = "")
{
    std::printf("criterion %d: %s - %s%s%s\n", id, ok ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : "; ", detail.c_str());
    if (!ok)
        ++g_failures;
}

std::vector<double> log_spaced(double lo, double hi, int n)
{
    std::vector<double> out(n);
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < n; ++i)
        out[i] = std::exp(la + (lb - la) * i / (n - 1));
    return out;
}

double closed_form_time_integral(double t, double omega0, double delta)
{
    const KernelAB k = kernel_AB(t, omega0, delta);
    const double a = omega0 * t;
    return 2.0 / (delta * k_pi * omega0 * omega0 * t) *
               (k.a * std::sin(a) + k.b * std::cos(a)) -
           2.0 * std::exp(-delta * t) / (delta * delta);
}

void criterion_1()
{
    bool ok = true;
    std::ostringstream detail;
    for (const std::string& id : preset_ids()) {
        const ResolvedRun run = resolve(preset(id));
        const double err = std::abs(rho_element(0.0, run.evolution) - 1.0);
        if (err >= 1e-3) {
            ok = false;
            detail << id << " |rho(0)-1|=" << err << " ";
        }
    }
    report(1, ok, "t=0 identity |rho(0)-1| < 1e-3 on all presets", detail.str());
}

void criterion_2()
{
    bool ok = true;
    std::ostringstream detail;
    for (const std::string& id : preset_ids()) {
        const ResolvedRun run = resolve(preset(id));
        const auto cfg = oracle::OracleConfig::defaults_for(run.config.delta);
        for (double t : log_spaced(1e-3 * run.t_end, run.t_end, 20)) {
            const double cf = closed_form_time_integral(t, run.evolution.omega0,
                                                        run.evolution.delta);
            const double or_t =
                oracle::time_integral(t, run.evolution.omega0, run.evolution.delta, cfg);
            const double scale_t = std::max(std::abs(cf), std::abs(or_t));
            if (std::abs(cf - or_t) > 1e-5 * scale_t) {
                ok = false;
                detail << id << " t=" << t << " osc rel="
                       << std::abs(cf - or_t) / scale_t << " ";
            }
            const double val = rho_element(t, run.evolution);
            const double ref = oracle::rho_reference(t, run.evolution, cfg);
            const double scale_r = std::max(std::abs(val), std::abs(ref));
            if (std::abs(val - ref) > 1e-4 * scale_r) {
                ok = false;
                detail << id << " t=" << t << " rho rel="
                       << std::abs(val - ref) / scale_r << " ";
            }
        }
    }
    report(2, ok, "closed forms vs oracle (osc rel 1e-5, rho rel 1e-4), 20 t per preset",
           detail.str());
}

void criterion_3()
{
    bool ok = true;
    std::ostringstream detail;
    const double d = 1.0e6;
    const auto cfg = oracle::OracleConfig::defaults_for(d);
    for (double ratio : {1.0, 10.0, 179.0}) {
        const double v = oracle::constant_integral(ratio * d, d, cfg);
        const double cf = second_order_constant(ratio * d, d);
        const double rel = std::abs(v - cf) / std::abs(cf);
        if (rel >= 1e-5) {
            ok = false;
            detail << "ratio=" << ratio << " rel=" << rel << " ";
        }
    }
    report(3, ok, "constant integral matches the arctan closed form to rel 1e-5",
           detail.str());
}

void criterion_4()
{
    std::mt19937 rng(20260824);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    bool ok = true;
    std::ostringstream detail;
    for (int i = 0; i < 100; ++i) {
        const double g = 2.7e4 * u(rng), h1 = 40.0 * u(rng), d = 1.0e6 * u(rng);
        const LineshapeParams p{1.8e8 * u(rng), d};
        const double w = rate_w(g, h1, lorentzian(p.omega0, p), -1);
        const double twice = 2.0 * decay_rate(g, h1, p);
        const double rel = std::abs(w - twice) / twice;
        if (rel >= 1e-12) {
            ok = false;
            detail << "point " << i << " rel=" << rel << " ";
        }
    }
    report(4, ok, "rate identity W(m=-1, resonance) = 2 gamma_-1 to rel 1e-12",
           detail.str());
}

void criterion_5()
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ang(0.0, k_pi);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    bool ok = true;
    std::ostringstream detail;
    const Nucleus nuclei[2] = {Nucleus::hydrogen(), Nucleus::carbon13()};
    for (int i = 0; i < 50; ++i) {
        const Nucleus& n = nuclei[i % 2];
        const double g = gyromagnetic_ratio(n);
        const SpinGeometry geom{2.0e-9 * u(rng), ang(rng), 2.0 * ang(rng)};
        const FieldConfig f{1.0e4 * u(rng), 25.0 * u(rng)};
        const SpectrumReport s = spectrum(n, geom, f);

        if (std::abs(s.de12 + s.de23 - 2.0 * s.gamma_n * f.h_z) >
            1e-12 * 2.0 * s.gamma_n * f.h_z) {
            ok = false;
            detail << "dE sum ";
        }
        if (std::abs(s.e1 + s.e2 + s.e3) > 1e-6 * std::abs(s.e3)) {
            ok = false;
            detail << "trace ";
        }
        const Eigen::Matrix4cd dm = dipolar_matrix(g, geom);
        const Eigen::Matrix4cd rm = rf_matrix(g, f.h_1, 1.0e8 * u(rng), 1e-8 * u(rng));
        if ((dm - dm.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * dm.cwiseAbs().maxCoeff()) {
            ok = false;
            detail << "dipolar herm ";
        }
        if ((rm - rm.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * rm.cwiseAbs().maxCoeff()) {
            ok = false;
            detail << "rf herm ";
        }
        const Eigen::Matrix4d zm = zeeman_matrix(g, f.h_z);
        for (int k = 0; k < 4; ++k)
            if (zm(3, k) != 0.0 || zm(k, 3) != 0.0 || dm(3, k) != 0.0 || dm(k, 3) != 0.0 ||
                rm(3, k) != std::complex<double>(0, 0) || rm(k, 3) != std::complex<double>(0, 0)) {
                ok = false;
                detail << "singlet ";
            }
    }
    const double magic = std::acos(1.0 / std::sqrt(3.0));
    const SpectrumReport ms =
        spectrum(Nucleus::hydrogen(), {2.0e-9, magic, 0.0}, {1.0e4, 25.0});
    if (std::abs(ms.de12 - ms.de23) >= 1e-9 * ms.gamma_n * 1.0e4) {
        ok = false;
        detail << "magic angle ";
    }
    report(5, ok, "spectrum identities, hermiticity, singlet decoupling, magic angle",
           detail.str());
}

void criterion_6()
{
    bool ok = true;
    std::ostringstream detail;
    for (const std::string& id : {std::string("fig2"), std::string("fig4")}) {
        const ResolvedRun run = resolve(preset(id));
        const double t_hi = 5.0 / run.config.delta;
        double worst = 0.0;
        for (int i = 1; i <= 200; ++i) {
            const double t = t_hi * i / 200.0;
            const double gap =
                rho_element(t, run.evolution) - markov_term(t, run.gamma_minus1);
            worst = std::min(worst, gap);
        }
        if (worst < -1e-6) {
            ok = false;
            detail << id << " min gap=" << worst << " ";
        }
    }
    report(6, ok, "Zeno ordering rho_complete >= rho_markov - 1e-6 on (0, 5/delta]",
           detail.str());
}

void criterion_7()
{
    bool ok = true;
    std::ostringstream detail;
    for (const std::string& id :
         {std::string("fig1a"), std::string("fig1b"), std::string("fig3a"),
          std::string("fig3b")}) {
        const ResolvedRun run = resolve(preset(id));
        const double rc = rho_element(run.t_end, run.evolution);
        const double rm = markov_term(run.t_end, run.gamma_minus1);
        const double rel = std::abs(rc - rm) / rm;
        detail << id << " rel=" << rel << " ";
        if (rel >= 0.05)
            ok = false;
    }
    report(7, ok, "asymptotic approach |rho_complete - rho_markov|/rho_markov < 5% at t_end",
           detail.str());
}

void criterion_8()
{
    bool ok = true;
    std::ostringstream detail;

    const LineshapeParams p{1.79e8, 1.0e6};
    auto g = [&](double x) { return lorentzian(p.omega0 + p.delta * x, p) * p.delta; };
    const double norm =
        quad::integrate_panels(g, {-1.0e9, -1.0e4, -10.0, 0.0, 10.0, 1.0e4, 1.0e9}, 1e-13, 1e-12);
    if (std::abs(norm - 1.0) >= 1e-8) {
        ok = false;
        detail << "norm err=" << std::abs(norm - 1.0) << " ";
    }

    const double e3 = 9.0e7, gn = 2.675e4, h1 = 25.0;
    const double v = renormalized_energy(e3, gn, h1, p, p.omega0);
    const double budget = std::abs(e3) * 1e-8 + 1e-3 * gn * gn * h1 * h1 / p.delta;
    if (std::abs(v - e3) >= budget) {
        ok = false;
        detail << "PV err=" << std::abs(v - e3) << " budget=" << budget << " ";
    }
    report(8, ok, "Lorentzian norm within 1e-8; center-matched PV returns E3", detail.str());
}

void criterion_9()
{
    bool ok = true;
    std::ostringstream detail;
    spinevo_ctx* ctx = spinevo_ctx_new();
    if (spinevo_ctx_preset(ctx, "fig2") != SPINEVO_OK ||
        spinevo_ctx_set(ctx, "n_points", "50") != SPINEVO_OK ||
        spinevo_run_csv(ctx, "acceptance_det1.csv", 1) != SPINEVO_OK ||
        spinevo_run_csv(ctx, "acceptance_det2.csv", 1) != SPINEVO_OK) {
        ok = false;
        detail << spinevo_last_error(ctx);
    } else {
        auto slurp = [](const char* path) {
            std::ifstream in(path, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        };
        const std::string a = slurp("acceptance_det1.csv");
        const std::string b = slurp("acceptance_det2.csv");
        if (a.empty() || a != b) {
            ok = false;
            detail << "reproducible runs differ";
        }
    }
    spinevo_ctx_free(ctx);
    std::remove("acceptance_det1.csv");
    std::remove("acceptance_det2.csv");
    report(9, ok, "two reproducible runs produce byte-identical CSV", detail.str());
}

} // namespace

int main()
{
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9();
    } catch (const std::exception& e) {
        std::printf("acceptance run aborted: %s\n", e.what());
        return 1;
    }
    std::printf("%d of 9 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
