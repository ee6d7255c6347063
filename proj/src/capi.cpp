#include "spinevo.h"

#include "spinevo/errors.hpp"
#include "spinevo/run_config.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

struct spinevo_ctx {
    spinevo::RunConfig config;
    std::string last_error;
};

namespace {

// Runs `body` and folds any exception into a status code on the context.
template <typename F>
int guarded(spinevo_ctx* ctx, F&& body)
{
    if (!ctx)
        return SPINEVO_EINVAL;
    ctx->last_error.clear();
    try {
        return body();
    } catch (const spinevo::numeric_error& e) {
        ctx->last_error = e.what();
        return SPINEVO_ENUMERIC;
    } catch (const std::invalid_argument& e) {
        ctx->last_error = e.what();
        return SPINEVO_EINVAL;
    } catch (const std::domain_error& e) {
        ctx->last_error = e.what();
        return SPINEVO_EINVAL;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return SPINEVO_ENUMERIC;
    }
}

} // namespace

extern "C" {

spinevo_ctx* spinevo_ctx_new(void)
{
    try {
        return new spinevo_ctx;
    } catch (...) {
        return nullptr;
    }
}

void spinevo_ctx_free(spinevo_ctx* ctx) { delete ctx; }

const char* spinevo_last_error(const spinevo_ctx* ctx)
{
    return ctx ? ctx->last_error.c_str() : "";
}

const char* spinevo_version(void) { return spinevo::version_string(); }

int spinevo_ctx_preset(spinevo_ctx* ctx, const char* id)
{
    return guarded(ctx, [&] {
        if (!id)
            throw std::invalid_argument("preset id is null");
        ctx->config = spinevo::preset(id);
        return SPINEVO_OK;
    });
}

int spinevo_ctx_set(spinevo_ctx* ctx, const char* key, const char* value)
{
    return guarded(ctx, [&] {
        if (!key || !value)
            throw std::invalid_argument("key/value is null");
        spinevo::apply_key_value(ctx->config, key, value);
        return SPINEVO_OK;
    });
}

int spinevo_ctx_load_file(spinevo_ctx* ctx, const char* path)
{
    return guarded(ctx, [&] {
        if (!path)
            throw std::invalid_argument("path is null");
        spinevo::apply_config_file(ctx->config, path);
        return SPINEVO_OK;
    });
}

int spinevo_rho(spinevo_ctx* ctx, double t, double* rho_complete, double* rho_markov)
{
    return guarded(ctx, [&] {
        if (!rho_complete || !rho_markov)
            throw std::invalid_argument("output pointer is null");
        const spinevo::ResolvedRun run = spinevo::resolve(ctx->config);
        *rho_complete = spinevo::rho_element(t, run.evolution);
        *rho_markov = spinevo::markov_term(t, run.gamma_minus1);
        return SPINEVO_OK;
    });
}

int spinevo_series(spinevo_ctx* ctx, const double* times, size_t n,
                   double* rho_complete, double* rho_markov)
{
    return guarded(ctx, [&] {
        if (!times || !rho_complete || !rho_markov)
            throw std::invalid_argument("array pointer is null");
        const spinevo::ResolvedRun run = spinevo::resolve(ctx->config);
        const std::vector<double> grid(times, times + n);
        const spinevo::EvolutionSeries s = spinevo::evolve_series(grid, run.evolution);
        for (size_t i = 0; i < n; ++i) {
            rho_complete[i] = s.rho_complete[i];
            rho_markov[i] = s.rho_markov[i];
        }
        return SPINEVO_OK;
    });
}

int spinevo_run_csv(spinevo_ctx* ctx, const char* out_path, int reproducible)
{
    return guarded(ctx, [&] {
        std::string target = out_path ? out_path : ctx->config.out_path;
        if (target.empty())
            throw std::invalid_argument("no output path: pass one or set the 'out' key");
        const spinevo::ResolvedRun run = spinevo::resolve(ctx->config);
        const std::string csv = spinevo::run_csv(run, {reproducible != 0});
        std::ofstream out(target, std::ios::binary);
        if (!out)
            throw std::invalid_argument("cannot open output file '" + target + "'");
        out << csv;
        if (!out)
            throw std::invalid_argument("write failed for '" + target + "'");
        if (run.config.emit_plot) {
            const std::string script_path = target + ".gp";
            std::ofstream gp(script_path, std::ios::binary);
            if (!gp)
                throw std::invalid_argument("cannot open plot script '" + script_path + "'");
            gp << spinevo::plot_script(target);
        }
        return SPINEVO_OK;
    });
}

int spinevo_spectrum_text(spinevo_ctx* ctx, char* buf, size_t buf_len, size_t* needed)
{
    return guarded(ctx, [&] {
        const spinevo::ResolvedRun run = spinevo::resolve(ctx->config);
        const std::string text = spinevo::spectrum_report(run);
        if (needed)
            *needed = text.size() + 1;
        if (!buf || buf_len < text.size() + 1)
            throw std::invalid_argument("spectrum buffer too small");
        std::memcpy(buf, text.c_str(), text.size() + 1);
        return SPINEVO_OK;
    });
}

} // extern "C"
