#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tctp/dynamics.hpp"
#include "tctp/entanglement.hpp"

namespace tctp {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,      ///< bad flags, bad config, unnormalizable coefficients
    exit_io = 3,         ///< unwritable output path
    exit_validation = 4, ///< analytic propagator disagrees with the oracle
};

/// Raised on configuration errors; commands map it to exit_usage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One series/sweep run. Coefficients are raw parser output; make_spec
/// applies the normalization policy.
struct RunConfig {
    Family family = Family::one;
    std::array<cplx, 3> coeffs{cplx(1, 0), cplx(0, 0), cplx(0, 0)};
    double alpha = 0.0;
    double gt_max = 25.0;
    int steps = 2001;
    double zero_threshold = default_zero_threshold;
    double min_window = default_min_window;
    std::string output_path; ///< empty = standard output
};

struct ValidateOptions {
    std::vector<Family> families{Family::one, Family::two};
    std::vector<double> alphas{0.0, 1.0, 6.0};
    double gt_max = 25.0;
    int steps = 200;
    /// CrossPhase::flipped is the gate's negative control and must exit 4.
    CrossPhase phase = CrossPhase::standard;
};

/// Parses "0.25", "-1.5e-3", "0.5+0.5j", "1j", ...
cplx parse_complex(const std::string& text);

/// Parses "x0:x1:step" into a grid inclusive of x1 up to rounding.
std::vector<double> parse_alpha_grid(const std::string& text);

/// Named coefficient sets for the published figure parameters.
std::optional<std::array<cplx, 3>> coeff_preset(const std::string& name);

/// Either a preset name or three comma-separated complex literals.
std::array<cplx, 3> parse_coeffs(const std::string& text);

/// Reads a small config file: one 'key = value' pair per line, blank lines
/// and '#' comments allowed. Raises UsageError on unreadable or malformed
/// input. Callers decide how keys map to options (flags win on conflict).
std::vector<std::pair<std::string, std::string>> parse_config_file(const std::string& path);

/// 17 significant digits, '.' separator, always with a decimal point or
/// exponent so the column is unambiguously floating point.
std::string format_csv_value(double value);

/// Uniform grid of `steps` samples on [0, gt_max].
std::vector<double> time_grid(double gt_max, int steps);

/// Applies the coefficient normalization policy: norms within 1e-6 of 1 are
/// silently fixed up (with a warning on `warnings`), anything further off
/// raises UsageError.
WStateSpec make_spec(const RunConfig& config, std::ostream& warnings);

/// Concurrence of the evolved state at every grid point.
ConcurrenceSeries concurrence_series(const WStateSpec& spec, double alpha,
                                     const std::vector<double>& grid);

struct SweepRow {
    double alpha = 0.0;
    int n_windows = 0;
    double total_dark_time = 0.0;
    double mean_concurrence = 0.0;
};

/// Series + refined dark-window scan at one alpha.
SweepRow sweep_point(const WStateSpec& spec, double alpha,
                     const std::vector<double>& grid, double zero_threshold,
                     double min_window);

/// Reads back a CSV produced by cmd_series (gt and concurrence columns).
ConcurrenceSeries parse_series_csv(std::istream& in);

/// `series`: per-time-sample CSV of concurrence and amplitudes.
int cmd_series(const RunConfig& config, std::ostream& out, std::ostream& err);

/// `sweep`: one CSV row per alpha with dark-window statistics.
int cmd_sweep(const RunConfig& config, const std::vector<double>& alpha_grid,
              std::ostream& out, std::ostream& err);

/// `validate`: analytic-vs-oracle deviation report; exit_validation when any
/// deviation exceeds oracle_match_tolerance.
int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);

} // namespace tctp
