#include "spinevo/run_config.hpp"
#include "spinevo/constants.hpp"
#include "spinevo/lineshape.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinevo {

namespace {

constexpr const char* k_version = "0.1.0";

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string& key, const std::string& value)
{
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': non-numeric value '" + value + "'");
    }
    if (pos != value.size())
        throw std::invalid_argument("config key '" + key + "': non-numeric value '" + value + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& value)
{
    const double v = parse_number(key, value);
    if (v != std::floor(v))
        throw std::invalid_argument("config key '" + key + "': expected an integer");
    return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& value)
{
    if (value == "1" || value == "true")
        return true;
    if (value == "0" || value == "false")
        return false;
    throw std::invalid_argument("config key '" + key + "': expected a boolean (0/1/true/false)");
}

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

RunConfig preset_base()
{
    RunConfig c;
    c.h_z = 1.0e4;
    c.delta = 1.0e6;
    c.theta_deg = 30.0;
    c.phi_deg = 0.0;
    c.r_cm = 2.0e-9;
    c.t_start = 0.0;
    c.n_points = 500;
    return c;
}

} // namespace

const std::vector<std::string>& preset_ids()
{
    static const std::vector<std::string> ids = {"fig1a", "fig1b", "fig2",
                                                 "fig3a", "fig3b", "fig4"};
    return ids;
}

RunConfig preset(const std::string& id)
{
    RunConfig c = preset_base();
    c.preset_id = id;
    if (id == "fig1a") {
        c.nucleus = "H1";
        c.h_1 = 25.0;
    } else if (id == "fig1b") {
        c.nucleus = "H1";
        c.h_1 = 37.0;
    } else if (id == "fig2") {
        c.nucleus = "H1";
        c.h_1 = 1.0;
        c.short_window = true;
    } else if (id == "fig3a") {
        c.nucleus = "C13";
        c.h_1 = 100.0;
    } else if (id == "fig3b") {
        c.nucleus = "C13";
        c.h_1 = 150.0;
    } else if (id == "fig4") {
        c.nucleus = "C13";
        c.h_1 = 1.0;
        c.short_window = true;
    } else {
        throw std::invalid_argument("unknown preset '" + id + "'");
    }
    return c;
}

void apply_key_value(RunConfig& c, const std::string& key, const std::string& value)
{
    if (key == "preset") {
        const std::string keep_out = c.out_path;
        c = preset(value);
        c.out_path = keep_out;
    } else if (key == "nucleus") {
        if (value != "H1" && value != "C13" && value != "custom")
            throw std::invalid_argument("config key 'nucleus': expected H1, C13 or custom");
        c.nucleus = value;
    } else if (key == "mu") {
        c.mu = parse_number(key, value);
    } else if (key == "h_z") {
        c.h_z = parse_number(key, value);
    } else if (key == "h_1") {
        c.h_1 = parse_number(key, value);
    } else if (key == "delta") {
        c.delta = parse_number(key, value);
    } else if (key == "theta") {
        c.theta_deg = parse_number(key, value);
    } else if (key == "phi") {
        c.phi_deg = parse_number(key, value);
    } else if (key == "r") {
        c.r_cm = parse_number(key, value);
    } else if (key == "t_start") {
        c.t_start = parse_number(key, value);
    } else if (key == "t_end") {
        c.t_end = parse_number(key, value);
    } else if (key == "n_points") {
        c.n_points = parse_int(key, value);
    } else if (key == "out") {
        c.out_path = value;
    } else if (key == "emit_plot") {
        c.emit_plot = parse_bool(key, value);
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void apply_config_text(RunConfig& c, const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        apply_key_value(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void apply_config_file(RunConfig& c, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_config_text(c, buf.str());
}

std::string emit_config(const RunConfig& c)
{
    std::ostringstream out;
    if (!c.preset_id.empty())
        out << "preset = " << c.preset_id << "\n";
    out << "nucleus = " << c.nucleus << "\n";
    if (c.mu)
        out << "mu = " << fmt(*c.mu) << "\n";
    out << "h_z = " << fmt(c.h_z) << "\n";
    out << "h_1 = " << fmt(c.h_1) << "\n";
    out << "delta = " << fmt(c.delta) << "\n";
    out << "theta = " << fmt(c.theta_deg) << "\n";
    out << "phi = " << fmt(c.phi_deg) << "\n";
    out << "r = " << fmt(c.r_cm) << "\n";
    out << "t_start = " << fmt(c.t_start) << "\n";
    if (c.t_end)
        out << "t_end = " << fmt(*c.t_end) << "\n";
    out << "n_points = " << c.n_points << "\n";
    if (!c.out_path.empty())
        out << "out = " << c.out_path << "\n";
    out << "emit_plot = " << (c.emit_plot ? 1 : 0) << "\n";
    return out.str();
}

ResolvedRun resolve(const RunConfig& c)
{
    if (c.n_points < 2)
        throw std::invalid_argument("config key 'n_points': must be >= 2");
    if (c.h_z <= 0.0)
        throw std::invalid_argument("config key 'h_z': must be positive");
    if (c.h_1 < 0.0)
        throw std::invalid_argument("config key 'h_1': must be non-negative");
    if (c.delta <= 0.0)
        throw std::invalid_argument("config key 'delta': must be positive");
    if (c.r_cm <= 0.0)
        throw std::invalid_argument("config key 'r': must be positive");
    if (c.theta_deg < 0.0 || c.theta_deg > 180.0)
        throw std::invalid_argument("config key 'theta': must lie in [0, 180] degrees");
    if (c.phi_deg < 0.0 || c.phi_deg >= 360.0)
        throw std::invalid_argument("config key 'phi': must lie in [0, 360) degrees");
    if (c.t_start < 0.0)
        throw std::invalid_argument("config key 't_start': must be non-negative");

    ResolvedRun run;
    run.config = c;

    if (c.nucleus == "H1")
        run.nucleus = Nucleus::hydrogen();
    else if (c.nucleus == "C13")
        run.nucleus = Nucleus::carbon13();
    else if (c.mu)
        run.nucleus = Nucleus{"custom", *c.mu, 0.5};
    else
        throw std::invalid_argument("config key 'mu': required when nucleus = custom");
    if (c.mu)
        run.nucleus.mu = *c.mu;
    if (run.nucleus.mu <= 0.0)
        throw std::invalid_argument("config key 'mu': must be positive");

    const SpinGeometry geom{c.r_cm, c.theta_deg * k_pi / 180.0, c.phi_deg * k_pi / 180.0};
    const FieldConfig fields{c.h_z, c.h_1};
    run.spectrum = spectrum(run.nucleus, geom, fields);
    if (run.spectrum.de23 <= 0.0)
        throw std::invalid_argument("configuration yields non-positive transition energy de23");

    run.gamma_minus1 =
        decay_rate(run.spectrum.gamma_n, c.h_1, {run.spectrum.de23, c.delta});

    if (c.t_end) {
        run.t_end = *c.t_end;
    } else if (c.short_window) {
        run.t_end = 10.0 / c.delta;
    } else if (run.gamma_minus1 > 0.0) {
        run.t_end = 5.0 / (2.0 * run.gamma_minus1);
    } else {
        throw std::invalid_argument("config key 't_end': required when h_1 = 0");
    }
    if (!(run.t_end > c.t_start))
        throw std::invalid_argument("config key 't_end': must exceed t_start");
    run.config.t_end = run.t_end;

    run.evolution = {run.gamma_minus1, run.spectrum.gamma_n * c.h_1, run.spectrum.de23,
                     c.delta};
    return run;
}

std::vector<double> time_grid(const ResolvedRun& run)
{
    const int n = run.config.n_points;
    std::vector<double> grid(n);
    const double t0 = run.config.t_start;
    const double dt = (run.t_end - t0) / (n - 1);
    for (int i = 0; i < n; ++i)
        grid[i] = t0 + dt * i;
    grid.back() = run.t_end;
    return grid;
}

std::string run_csv(const ResolvedRun& run, const CsvOptions& opt)
{
    std::ostringstream out;
    out << "# spinevo " << k_version << "\n";
    if (!opt.reproducible) {
        char stamp[64];
        const std::time_t now = std::time(nullptr);
        std::tm tm{};
        gmtime_r(&now, &tm);
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
        out << "# generated = " << stamp << "\n";
    }
    RunConfig echoed = run.config;
    echoed.out_path.clear(); // output location is not part of the physics
    std::istringstream cfg(emit_config(echoed));
    std::string line;
    while (std::getline(cfg, line))
        out << "# " << line << "\n";
    out << "# derived_gamma_n = " << fmt(run.spectrum.gamma_n) << "\n";
    out << "# derived_delta_e23 = " << fmt(run.spectrum.de23) << "\n";
    out << "# derived_gamma_minus1 = " << fmt(run.gamma_minus1) << "\n";

    out << "t_seconds,rho_complete,rho_markov\n";
    const EvolutionSeries series = evolve_series(time_grid(run), run.evolution);
    for (std::size_t i = 0; i < series.times.size(); ++i)
        out << fmt(series.times[i]) << ',' << fmt(series.rho_complete[i]) << ','
            << fmt(series.rho_markov[i]) << "\n";
    return out.str();
}

std::string spectrum_report(const ResolvedRun& run)
{
    const SpectrumReport& s = run.spectrum;
    std::ostringstream out;
    auto row = [&](const char* name, double value, const char* unit) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-16s %22.15e  %s\n", name, value, unit);
        out << buf;
    };
    row("gamma_n", s.gamma_n, "rad s^-1 G^-1");
    row("E1", s.e1, "rad s^-1");
    row("E2", s.e2, "rad s^-1");
    row("E3", s.e3, "rad s^-1");
    row("E4", s.e4, "rad s^-1");
    row("dE12", s.de12, "rad s^-1");
    row("dE23", s.de23, "rad s^-1");
    row("gamma_minus1", run.gamma_minus1, "s^-1");
    row("omega0/delta", s.de23 / run.config.delta, "");
    row("zeno_window", 1.0 / run.config.delta, "s");
    return out.str();
}

std::string plot_script(const std::string& csv_path)
{
    std::ostringstream out;
    out << "set datafile separator ','\n"
        << "set xlabel 't [s]'\n"
        << "set ylabel '<-1|rho(t)|-1>'\n"
        << "plot '" << csv_path << "' using 1:2 with lines title 'complete', \\\n"
        << "     '" << csv_path << "' using 1:3 with lines dashtype 2 title 'markov'\n"
        << "pause -1\n";
    return out.str();
}

const char* version_string() { return k_version; }

} // namespace spinevo
