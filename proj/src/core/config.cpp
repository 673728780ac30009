#include <array>
#include <charconv>
#include <cmath>

#include "CLI11.hpp"
#include "fburgers/error.hpp"
#include "fburgers/simulation.hpp"

namespace fburgers {

namespace {

// Order matters only for error reporting: the first bad key is named.
constexpr std::array<const char*, 12> valued_keys = {
    "n",          "gamma",         "alpha",         "dt",          "t-final",    "ic",
    "dealias",    "snapshot-every", "output",       "detect-blowup", "slope-limit", "tail-limit",
};

double to_double(const std::string& key, const std::string& text) {
    double v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(ErrorKind::Usage, "invalid number '" + text + "' for " + key, key);
    return v;
}

int to_int(const std::string& key, const std::string& text) {
    int v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(ErrorKind::Usage, "invalid integer '" + text + "' for " + key, key);
    return v;
}

bool to_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw Error(ErrorKind::Usage, "expected true or false for " + key + ", got '" + text + "'", key);
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

constexpr const char* app_description =
    "Pseudo-spectral solver for the fractional dissipative Burgers equation on the periodic interval";

void configure_app(CLI::App& app, std::array<std::string, valued_keys.size()>& values, bool& linear_only) {
    const std::array<const char*, valued_keys.size()> help = {
        "grid size, even and >= 4 (default 256)",
        "dissipation strength gamma >= 0 (default 0)",
        "fractional order in (0, 2] (default 1)",
        "time step or \"auto\" (default auto)",
        "final simulation time (default 1)",
        "neg-sine | scaled-neg-sine:a | gaussian:w | random:kmax:seed (default neg-sine)",
        "off | two-thirds (default off)",
        "simulation time between stored snapshots (default 0.1)",
        "output directory (default ./output)",
        "true | false (default true)",
        "halt when |min u_x| exceeds this (default 100)",
        "halt when the top-third spectral energy share exceeds this (default 0.1)",
    };
    for (std::size_t i = 0; i < valued_keys.size(); ++i)
        app.add_option(std::string("--") + valued_keys[i], values[i], help[i]);
    app.add_flag("--linear-only", linear_only, "drop the nonlinear term (test mode)");
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    app.allow_config_extras(false);
}

}  // namespace

void RunConfig::validate() const {
    if (n < 4 || n % 2 != 0) throw Error(ErrorKind::Usage, "n must be even and >= 4", "n");
    params.validate();
    if (!(snapshot_every > 0.0) || !std::isfinite(snapshot_every))
        throw Error(ErrorKind::Usage, "snapshot-every must be > 0", "snapshot-every");
    if (snapshot_every > params.t_final)
        throw Error(ErrorKind::Usage, "snapshot-every must not exceed t-final", "snapshot-every");
    if (!(thresholds.slope_limit > 0.0))
        throw Error(ErrorKind::Usage, "slope-limit must be > 0", "slope-limit");
    if (!(thresholds.tail_limit > 0.0 && thresholds.tail_limit < 1.0))
        throw Error(ErrorKind::Usage, "tail-limit must lie in (0, 1)", "tail-limit");
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& raw) {
    const std::string value = trim(raw);
    if (key == "n") cfg.n = to_int(key, value);
    else if (key == "gamma") cfg.params.gamma = to_double(key, value);
    else if (key == "alpha") cfg.params.alpha = to_double(key, value);
    else if (key == "dt") {
        if (value == "auto") cfg.params.dt.reset();
        else cfg.params.dt = to_double(key, value);
    } else if (key == "t-final") cfg.params.t_final = to_double(key, value);
    else if (key == "ic") cfg.ic = InitialCondition::parse(value);
    else if (key == "dealias") {
        if (value == "off") cfg.params.dealias = DealiasRule::off;
        else if (value == "two-thirds") cfg.params.dealias = DealiasRule::two_thirds;
        else throw Error(ErrorKind::Usage, "dealias must be off or two-thirds", key);
    } else if (key == "snapshot-every") cfg.snapshot_every = to_double(key, value);
    else if (key == "output") {
        if (value.empty()) throw Error(ErrorKind::Usage, "output directory must not be empty", key);
        cfg.output_dir = value;
    } else if (key == "detect-blowup") cfg.detect_blowup = to_bool(key, value);
    else if (key == "slope-limit") cfg.thresholds.slope_limit = to_double(key, value);
    else if (key == "tail-limit") cfg.thresholds.tail_limit = to_double(key, value);
    else if (key == "linear-only") cfg.params.linear_only = to_bool(key, value);
    else throw Error(ErrorKind::Usage, "unknown key '" + key + "'", key);
}

RunConfig parse_config(int argc, const char* const* argv) {
    std::array<std::string, valued_keys.size()> values;
    bool linear_only = false;
    CLI::App app{app_description, "fburg"};
    configure_app(app, values, linear_only);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorKind::Usage, e.what());
    }

    RunConfig cfg;
    for (std::size_t i = 0; i < valued_keys.size(); ++i)
        if (app.count(std::string("--") + valued_keys[i]) > 0) apply_setting(cfg, valued_keys[i], values[i]);
    cfg.params.linear_only = linear_only;
    cfg.validate();
    return cfg;
}

std::string usage_text() {
    std::array<std::string, valued_keys.size()> values;
    bool linear_only = false;
    CLI::App app{app_description, "fburg"};
    configure_app(app, values, linear_only);
    return app.help();
}

}  // namespace fburgers
