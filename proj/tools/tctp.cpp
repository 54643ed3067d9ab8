#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tctp/run.hpp"

namespace {

struct RawRunOptions {
    int family = 1;
    std::string coeffs = "equal";
    double alpha = 0.0;
    double gt_max = 25.0;
    int steps = 2001;
    double zero_threshold = tctp::default_zero_threshold;
    double min_window = tctp::default_min_window;
    std::string out;
    std::string config_path;
    std::string alpha_grid; // sweep only
};

struct RunOptionHandles {
    CLI::Option* family = nullptr;
    CLI::Option* coeffs = nullptr;
    CLI::Option* alpha = nullptr;
    CLI::Option* gt_max = nullptr;
    CLI::Option* steps = nullptr;
    CLI::Option* zero_threshold = nullptr;
    CLI::Option* min_window = nullptr;
    CLI::Option* out = nullptr;
    CLI::Option* alpha_grid = nullptr;
};

RunOptionHandles add_run_options(CLI::App* cmd, RawRunOptions& raw) {
    RunOptionHandles handles;
    handles.family = cmd->add_option("--family", raw.family, "initial-state family")
                         ->check(CLI::IsMember({1, 2}))
                         ->capture_default_str();
    handles.coeffs =
        cmd->add_option("--coeffs", raw.coeffs,
                        "initial coefficients 'a,b,c' (complex literals like 0.5+0.5j) or a "
                        "preset: equal, heavy-a, heavy-b, heavy-c")
            ->capture_default_str();
    handles.gt_max = cmd->add_option("--gt-max", raw.gt_max, "end of the scaled-time grid")
                         ->capture_default_str();
    handles.steps =
        cmd->add_option("--steps", raw.steps, "number of grid samples on [0, gt-max]")
            ->capture_default_str();
    handles.zero_threshold =
        cmd->add_option("--zero-threshold", raw.zero_threshold,
                        "concurrence value below which a sample counts as zero")
            ->capture_default_str();
    handles.min_window =
        cmd->add_option("--min-window", raw.min_window,
                        "minimum dark-interval length reported as sudden death")
            ->capture_default_str();
    handles.out = cmd->add_option("--out", raw.out, "output path (default: standard output)");
    cmd->add_option("--config", raw.config_path,
                    "key=value config file; flags win on conflict");
    return handles;
}

double to_double(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw tctp::UsageError("config key '" + key + "': cannot parse '" + value + "'");
    }
}

int to_int(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const int parsed = std::stoi(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw tctp::UsageError("config key '" + key + "': cannot parse '" + value + "'");
    }
}

// config values fill in whatever the command line left untouched
void apply_config(const RunOptionHandles& handles, RawRunOptions& raw) {
    if (raw.config_path.empty())
        return;
    for (const auto& [key, value] : tctp::parse_config_file(raw.config_path)) {
        if (key == "family") {
            if (handles.family->count() == 0) {
                raw.family = to_int(value, key);
                if (raw.family != 1 && raw.family != 2)
                    throw tctp::UsageError("config key 'family': must be 1 or 2");
            }
        } else if (key == "coeffs") {
            if (handles.coeffs->count() == 0)
                raw.coeffs = value;
        } else if (key == "alpha") {
            if (handles.alpha != nullptr && handles.alpha->count() == 0)
                raw.alpha = to_double(value, key);
        } else if (key == "alpha-grid") {
            if (handles.alpha_grid != nullptr && handles.alpha_grid->count() == 0)
                raw.alpha_grid = value;
        } else if (key == "gt-max") {
            if (handles.gt_max->count() == 0)
                raw.gt_max = to_double(value, key);
        } else if (key == "steps") {
            if (handles.steps->count() == 0)
                raw.steps = to_int(value, key);
        } else if (key == "zero-threshold") {
            if (handles.zero_threshold->count() == 0)
                raw.zero_threshold = to_double(value, key);
        } else if (key == "min-window") {
            if (handles.min_window->count() == 0)
                raw.min_window = to_double(value, key);
        } else if (key == "out") {
            if (handles.out->count() == 0)
                raw.out = value;
        } else {
            throw tctp::UsageError("config file: unknown key '" + key + "'");
        }
    }
}

tctp::RunConfig to_config(const RawRunOptions& raw) {
    tctp::RunConfig config;
    config.family = raw.family == 1 ? tctp::Family::one : tctp::Family::two;
    config.coeffs = tctp::parse_coeffs(raw.coeffs);
    config.alpha = raw.alpha;
    config.gt_max = raw.gt_max;
    config.steps = raw.steps;
    config.zero_threshold = raw.zero_threshold;
    config.min_window = raw.min_window;
    config.output_path = raw.out;
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement dynamics of two dipole-coupled two-level atoms exchanging "
                 "photon pairs with a lossless two-mode cavity"};
    app.require_subcommand(1);

    RawRunOptions series_raw;
    CLI::App* series = app.add_subcommand(
        "series", "concurrence time series as CSV (gt, concurrence, amplitudes)");
    RunOptionHandles series_handles = add_run_options(series, series_raw);
    series_handles.alpha =
        series->add_option("--alpha", series_raw.alpha, "dipole-dipole strength over coupling")
            ->capture_default_str();

    RawRunOptions sweep_raw;
    sweep_raw.alpha_grid = "0:6:1";
    CLI::App* sweep = app.add_subcommand(
        "sweep", "dark-window statistics per alpha as CSV");
    RunOptionHandles sweep_handles = add_run_options(sweep, sweep_raw);
    sweep_handles.alpha_grid =
        sweep->add_option("--alpha-grid", sweep_raw.alpha_grid, "alpha grid 'x0:x1:step'")
            ->capture_default_str();

    int validate_family = 0;
    std::vector<double> validate_alphas;
    std::string validate_grid;
    double validate_gt_max = 25.0;
    int validate_steps = 200;
    bool negative_control = false;
    CLI::App* validate = app.add_subcommand(
        "validate", "compare the closed-form propagator against exp(-iHt)");
    validate->add_option("--family", validate_family, "restrict to one family (default: both)")
        ->check(CLI::IsMember({1, 2}));
    auto* alpha_opt =
        validate->add_option("--alpha", validate_alphas, "alpha values (default: 0 1 6)");
    validate->add_option("--alpha-grid", validate_grid, "alpha grid 'x0:x1:step'")
        ->excludes(alpha_opt);
    validate->add_option("--gt-max", validate_gt_max, "end of the scaled-time grid")
        ->capture_default_str();
    validate->add_option("--steps", validate_steps, "number of grid samples")
        ->capture_default_str();
    validate->add_flag("--negative-control", negative_control,
                       "use the sign-flipped cross-phase propagator; the gate must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? tctp::exit_ok : tctp::exit_usage;
    }

    try {
        if (series->parsed()) {
            apply_config(series_handles, series_raw);
            return tctp::cmd_series(to_config(series_raw), std::cout, std::cerr);
        }

        if (sweep->parsed()) {
            apply_config(sweep_handles, sweep_raw);
            return tctp::cmd_sweep(to_config(sweep_raw),
                                   tctp::parse_alpha_grid(sweep_raw.alpha_grid),
                                   std::cout, std::cerr);
        }

        tctp::ValidateOptions options;
        if (validate_family == 1)
            options.families = {tctp::Family::one};
        else if (validate_family == 2)
            options.families = {tctp::Family::two};
        if (!validate_grid.empty())
            options.alphas = tctp::parse_alpha_grid(validate_grid);
        else if (!validate_alphas.empty())
            options.alphas = validate_alphas;
        options.gt_max = validate_gt_max;
        options.steps = validate_steps;
        options.phase = negative_control ? tctp::CrossPhase::flipped : tctp::CrossPhase::standard;
        return tctp::cmd_validate(options, std::cout, std::cerr);
    } catch (const tctp::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return tctp::exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return tctp::exit_usage;
    }
}
