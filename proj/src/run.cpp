#include "tctp/run.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "tctp/oracle.hpp"

namespace tctp {

namespace {

double parse_double_strict(const std::string& text, const char* what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw UsageError(std::string(what) + ": cannot parse '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    return parts;
}

std::string strip_spaces(const std::string& text) {
    std::string out;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            out.push_back(ch);
    return out;
}

std::string trim(const std::string& text) {
    std::size_t first = 0, last = text.size();
    while (first < last && std::isspace(static_cast<unsigned char>(text[first])))
        ++first;
    while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1])))
        --last;
    return text.substr(first, last - first);
}

void check_run_config(const RunConfig& config) {
    if (!(config.gt_max > 0.0))
        throw UsageError("gt-max must be > 0");
    if (config.steps < 2)
        throw UsageError("steps must be at least 2");
    if (!(config.zero_threshold > 0.0))
        throw UsageError("zero-threshold must be > 0");
    if (!(config.min_window >= 0.0))
        throw UsageError("min-window must be >= 0");
    if (!(config.alpha >= 0.0))
        throw UsageError("alpha must be >= 0");
}

// Commands write to `out` unless an output path is set, in which case they
// stream into the file and report exit_io on failure.
int with_output(const std::string& path, std::ostream& out, std::ostream& err,
                const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(out);
        return out ? exit_ok : exit_io;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return exit_io;
    }
    body(file);
    file.flush();
    if (!file) {
        err << "error: write to '" << path << "' failed\n";
        return exit_io;
    }
    return exit_ok;
}

} // namespace

cplx parse_complex(const std::string& raw) {
    const std::string text = strip_spaces(raw);
    if (text.empty())
        throw UsageError("empty complex literal");

    if (text.back() != 'j' && text.back() != 'J')
        return {parse_double_strict(text, "complex literal"), 0.0};

    const std::string body = text.substr(0, text.size() - 1);
    // split at the last sign that is neither leading nor part of an exponent
    std::size_t cut = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            cut = i;
            break;
        }
    }
    if (cut == std::string::npos) {
        // purely imaginary: "j", "-j", "0.5j", ...
        if (body.empty() || body == "+")
            return {0.0, 1.0};
        if (body == "-")
            return {0.0, -1.0};
        return {0.0, parse_double_strict(body, "complex literal")};
    }
    const double re = parse_double_strict(body.substr(0, cut), "complex literal");
    std::string imag_part = body.substr(cut);
    if (imag_part == "+")
        return {re, 1.0};
    if (imag_part == "-")
        return {re, -1.0};
    return {re, parse_double_strict(imag_part, "complex literal")};
}

std::vector<double> parse_alpha_grid(const std::string& text) {
    const auto parts = split(strip_spaces(text), ':');
    if (parts.size() != 3)
        throw UsageError("alpha grid must be 'x0:x1:step'");
    const double x0 = parse_double_strict(parts[0], "alpha grid");
    const double x1 = parse_double_strict(parts[1], "alpha grid");
    const double step = parse_double_strict(parts[2], "alpha grid");
    if (!(step > 0.0))
        throw UsageError("alpha grid step must be > 0");
    if (x0 < 0.0)
        throw UsageError("alpha grid values must be >= 0");

    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double value = x0 + k * step;
        if (value > x1 + 1e-9 * step)
            break;
        grid.push_back(value);
    }
    return grid;
}

std::optional<std::array<cplx, 3>> coeff_preset(const std::string& name) {
    const double s3 = 1.0 / std::sqrt(3.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    const double s23 = std::sqrt(2.0 / 3.0);
    if (name == "equal")
        return std::array<cplx, 3>{s3, s3, s3};
    if (name == "heavy-a")
        return std::array<cplx, 3>{s23, s6, s6};
    if (name == "heavy-b")
        return std::array<cplx, 3>{s6, s23, s6};
    if (name == "heavy-c")
        return std::array<cplx, 3>{s6, s6, s23};
    return std::nullopt;
}

std::array<cplx, 3> parse_coeffs(const std::string& text) {
    if (auto preset = coeff_preset(strip_spaces(text)))
        return *preset;
    const auto parts = split(text, ',');
    if (parts.size() != 3)
        throw UsageError("coeffs must be a preset name or 'a,b,c'");
    return {parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2])};
}

std::vector<std::pair<std::string, std::string>> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read config file '" + path + "'");
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line.substr(0, line.find('#')));
        if (content.empty())
            continue;
        const std::size_t eq = content.find('=');
        if (eq == std::string::npos)
            throw UsageError("config file '" + path + "' line " + std::to_string(line_no) +
                             ": expected 'key=value'");
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty() || value.empty())
            throw UsageError("config file '" + path + "' line " + std::to_string(line_no) +
                             ": expected 'key=value'");
        pairs.emplace_back(key, value);
    }
    return pairs;
}

std::string format_csv_value(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    std::string text(buf);
    if (text.find_first_of(".eE") == std::string::npos &&
        text.find_first_of("0123456789") != std::string::npos)
        text += ".0";
    return text;
}

std::vector<double> time_grid(double gt_max, int steps) {
    if (!(gt_max > 0.0))
        throw std::invalid_argument("time_grid: gt_max must be > 0");
    if (steps < 2)
        throw std::invalid_argument("time_grid: steps must be at least 2");
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i)
        grid[i] = gt_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    return grid;
}

WStateSpec make_spec(const RunConfig& config, std::ostream& warnings) {
    const auto& [a, b, c] = config.coeffs;
    const double norm =
        std::sqrt(std::norm(a) + std::norm(b) + std::norm(c));
    if (std::abs(norm - 1.0) >= 1e-6)
        throw UsageError("coefficients are not normalized: |a|^2+|b|^2+|c|^2 = " +
                         std::to_string(norm * norm));
    if (std::abs(norm - 1.0) > 1e-12)
        warnings << "warning: coefficient norm off by " << std::abs(norm - 1.0)
                 << "; renormalizing\n";
    return {config.family, a / norm, b / norm, c / norm};
}

ConcurrenceSeries concurrence_series(const WStateSpec& spec, double alpha,
                                     const std::vector<double>& grid) {
    ConcurrenceSeries series;
    series.gts = grid;
    series.values.reserve(grid.size());
    for (double gt : grid)
        series.values.push_back(concurrence_xstate(evolve(spec, ModelParams(alpha, gt))));
    return series;
}

SweepRow sweep_point(const WStateSpec& spec, double alpha,
                     const std::vector<double>& grid, double zero_threshold,
                     double min_window) {
    const ConcurrenceSeries series = concurrence_series(spec, alpha, grid);
    const auto concurrence_at = [&](double gt) {
        return concurrence_xstate(evolve(spec, ModelParams(alpha, gt)));
    };
    const EsdReport report = scan_esd(series, zero_threshold, min_window, concurrence_at);
    const double mean =
        std::accumulate(series.values.begin(), series.values.end(), 0.0) /
        static_cast<double>(series.values.size());
    return {alpha, static_cast<int>(report.windows.size()), report.total_dark_time(), mean};
}

ConcurrenceSeries parse_series_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("gt,concurrence", 0) != 0)
        throw std::runtime_error("series CSV: missing 'gt,concurrence' header");
    ConcurrenceSeries series;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto fields = split(line, ',');
        if (fields.size() < 2)
            throw std::runtime_error("series CSV: malformed row '" + line + "'");
        series.gts.push_back(parse_double_strict(fields[0], "series CSV gt"));
        series.values.push_back(parse_double_strict(fields[1], "series CSV concurrence"));
    }
    return series;
}

int cmd_series(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        check_run_config(config);
        const WStateSpec spec = make_spec(config, err);
        const std::vector<double> grid = time_grid(config.gt_max, config.steps);
        const int n_amps = spec.family == Family::one ? 3 : 4;

        return with_output(config.output_path, out, err, [&](std::ostream& os) {
            os << "gt,concurrence";
            for (int i = 1; i <= n_amps; ++i)
                os << ",x" << i << "_re,x" << i << "_im";
            os << "\n";
            for (double gt : grid) {
                const AmplitudeVector state = evolve(spec, ModelParams(config.alpha, gt));
                os << format_csv_value(gt) << ',' << format_csv_value(concurrence_xstate(state));
                for (int i = 0; i < n_amps; ++i)
                    os << ',' << format_csv_value(state.amps(i).real()) << ','
                       << format_csv_value(state.amps(i).imag());
                os << "\n";
            }
        });
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_sweep(const RunConfig& config, const std::vector<double>& alpha_grid,
              std::ostream& out, std::ostream& err) {
    try {
        check_run_config(config);
        if (alpha_grid.empty())
            throw UsageError("alpha grid is empty");
        const WStateSpec spec = make_spec(config, err);
        const std::vector<double> grid = time_grid(config.gt_max, config.steps);

        return with_output(config.output_path, out, err, [&](std::ostream& os) {
            os << "alpha,n_windows,total_dark_time,mean_concurrence\n";
            for (double alpha : alpha_grid) {
                const SweepRow row = sweep_point(spec, alpha, grid, config.zero_threshold,
                                                 config.min_window);
                os << format_csv_value(row.alpha) << ',' << row.n_windows << ','
                   << format_csv_value(row.total_dark_time) << ','
                   << format_csv_value(row.mean_concurrence) << "\n";
            }
        });
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.families.empty())
            throw UsageError("no families to validate");
        if (options.alphas.empty())
            throw UsageError("alpha list is empty");
        const std::vector<double> grid = time_grid(options.gt_max, options.steps);

        bool all_ok = true;
        for (Family family : options.families) {
            for (double alpha : options.alphas) {
                if (!(alpha >= 0.0))
                    throw UsageError("alpha must be >= 0");
                const double dev = validate_analytic(family, alpha, grid, options.phase);
                const bool ok = dev <= oracle_match_tolerance;
                all_ok = all_ok && ok;
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.3e", dev);
                out << "family=" << static_cast<int>(family) << " alpha=" << alpha
                    << " max_deviation=" << buf << (ok ? " ok" : " FAIL") << "\n";
            }
        }
        char tol[32];
        std::snprintf(tol, sizeof tol, "%.0e", oracle_match_tolerance);
        out << "validation: " << (all_ok ? "PASS" : "FAIL") << " (tolerance " << tol << ")\n";
        return all_ok ? exit_ok : exit_validation;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace tctp
