// Command-line front end; talks to libspinevo exclusively through the
// public C interface.

#include "spinevo.h"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

int fail(spinevo_ctx* ctx, int status)
{
    std::fprintf(stderr, "spinevo: %s\n", spinevo_last_error(ctx));
    return status;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-spin survival-element evolution: CSV series and spectrum reports"};
    app.set_version_flag("--version", spinevo_version());

    std::string preset_id, config_path, out_path;
    std::vector<std::string> overrides;
    bool reproducible = false, spectrum = false;

    app.add_option("--preset", preset_id, "Figure preset id (fig1a, fig1b, fig2, fig3a, fig3b, fig4)");
    app.add_option("--config", config_path, "key=value config file merged over the preset");
    app.add_option("--out", out_path, "CSV output path (overrides the config 'out' key)");
    app.add_option("--set", overrides, "Single key=value override, repeatable")
        ->type_name("KEY=VALUE");
    app.add_flag("--reproducible", reproducible, "Omit the timestamp line from CSV metadata");
    app.add_flag("--spectrum", spectrum, "Print the derived spectrum report instead of running");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    std::unique_ptr<spinevo_ctx, decltype(&spinevo_ctx_free)> ctx(spinevo_ctx_new(),
                                                                  &spinevo_ctx_free);
    if (!ctx) {
        std::fprintf(stderr, "spinevo: out of memory\n");
        return 2;
    }

    int rc = SPINEVO_OK;
    if (!preset_id.empty() && (rc = spinevo_ctx_preset(ctx.get(), preset_id.c_str())))
        return fail(ctx.get(), rc);
    if (!config_path.empty() && (rc = spinevo_ctx_load_file(ctx.get(), config_path.c_str())))
        return fail(ctx.get(), rc);
    for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "spinevo: --set expects key=value, got '%s'\n", kv.c_str());
            return 1;
        }
        if ((rc = spinevo_ctx_set(ctx.get(), kv.substr(0, eq).c_str(),
                                  kv.substr(eq + 1).c_str())))
            return fail(ctx.get(), rc);
    }
    if (!out_path.empty() && (rc = spinevo_ctx_set(ctx.get(), "out", out_path.c_str())))
        return fail(ctx.get(), rc);

    if (spectrum) {
        size_t needed = 0;
        spinevo_spectrum_text(ctx.get(), nullptr, 0, &needed);
        if (needed == 0)
            return fail(ctx.get(), SPINEVO_EINVAL);
        std::string buf(needed, '\0');
        if ((rc = spinevo_spectrum_text(ctx.get(), buf.data(), buf.size(), nullptr)))
            return fail(ctx.get(), rc);
        std::fputs(buf.c_str(), stdout);
        return 0;
    }

    if ((rc = spinevo_run_csv(ctx.get(), nullptr, reproducible ? 1 : 0)))
        return fail(ctx.get(), rc);
    return 0;
}
