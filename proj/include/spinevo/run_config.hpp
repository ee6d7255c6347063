#ifndef SPINEVO_RUN_CONFIG_HPP
#define SPINEVO_RUN_CONFIG_HPP

#include "spinevo/evolution.hpp"
#include "spinevo/spin_model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinevo {

// A run is described by a flat key=value document ('#' comments allowed),
// optionally seeded from a figure preset; later assignments override earlier
// ones.  Unknown keys are rejected.
struct RunConfig {
    std::string nucleus = "H1"; // "H1", "C13", or "custom" (explicit mu)
    std::optional<double> mu;   // overrides the preset moment when given
    double h_z = 0.0;           // [Oe]
    double h_1 = 0.0;           // [Oe]
    double delta = 0.0;         // [s^-1]
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double r_cm = 0.0;
    double t_start = 0.0;            // [s]
    std::optional<double> t_end;     // [s]; presets derive a default
    int n_points = 500;
    std::string out_path;
    bool emit_plot = false;

    std::string preset_id;  // empty when hand-assembled
    bool short_window = false; // preset time-window class (10/delta vs 5/(2 gamma))

    bool operator==(const RunConfig&) const = default;
};

// Everything derived from a validated RunConfig.
struct ResolvedRun {
    RunConfig config;
    Nucleus nucleus;
    SpectrumReport spectrum;
    double gamma_minus1 = 0.0;
    double t_end = 0.0;
    EvolutionParams evolution;
};

/// Known preset ids: fig1a, fig1b, fig2, fig3a, fig3b, fig4.
const std::vector<std::string>& preset_ids();

/// Throws std::invalid_argument for an unknown id.
RunConfig preset(const std::string& id);

/// Parse a key=value document into `base`; throws std::invalid_argument
/// naming the offending key.
void apply_config_text(RunConfig& base, const std::string& text);
void apply_config_file(RunConfig& base, const std::string& path);

/// Single key=value assignment (the --set flag).
void apply_key_value(RunConfig& base, const std::string& key, const std::string& value);

/// Serialize the resolved configuration as a parse-able key=value document.
std::string emit_config(const RunConfig& cfg);

/// Validate invariants and compute all derived quantities.
ResolvedRun resolve(const RunConfig& cfg);

/// Evenly spaced time grid [t_start, t_end] with n_points entries.
std::vector<double> time_grid(const ResolvedRun& run);

struct CsvOptions {
    bool reproducible = false; // suppress the timestamp comment line
};

/// CSV document: '#'-prefixed metadata block, `t_seconds,rho_complete,rho_markov`
/// header, then one row per grid point (17 significant digits, LF endings).
std::string run_csv(const ResolvedRun& run, const CsvOptions& opt);

/// Fixed-column text report of the derived spectrum and rates.
std::string spectrum_report(const ResolvedRun& run);

/// gnuplot script reading `csv_path`; written next to the CSV when
/// emit_plot is set.
std::string plot_script(const std::string& csv_path);

const char* version_string();

} // namespace spinevo

#endif
