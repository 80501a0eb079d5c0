#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetalab/complex_kernel.hpp"
#include "zetalab/zeta_reps.hpp"

namespace zetalab {

enum class Subcommand { Eval, Zeros, Audit, Check, Bench };
enum class OutputFormat { Csv, Json, Svg };

struct CommandConfig {
    Subcommand subcommand = Subcommand::Eval;
    Complex s{0.5, 14.0};
    Representation rep;  // rep.tol is overwritten by `tol` when the command runs
    std::int64_t b_max = 1'000'000;
    double tol = kDefaultTolerance;
    std::optional<double> t_min;  // subcommand-specific defaults when unset
    std::optional<double> t_max;
    double growth = 2.0;
    OutputFormat output_format = OutputFormat::Csv;
    std::optional<std::string> output_path;
};

struct BenchRecord {
    Representation representation;
    std::int64_t terms_used = 0;
    double wall_time = 0.0;  // seconds
    double abs_error_vs_reference = 0.0;
    double est_error = 0.0;
};

// Complex literal grammar: [sign] real [sign imag 'i'] | [sign] imag 'i', where real and imag
// are decimal numbers with an optional exponent. "0.5", "14i", "-0.5-14.2i", "1e-3+2i" are valid.
// Throws ParseError.
[[nodiscard]] Complex parse_complex(std::string_view text);

// Shortest round-trip form, always "re+imi" / "re-imi"; parse_complex(format_complex(z)) == z.
[[nodiscard]] std::string format_complex(Complex z);

// 17 significant digits.
[[nodiscard]] std::string format_real(double x);

[[nodiscard]] Subcommand parse_subcommand(std::string_view name);
[[nodiscard]] OutputFormat parse_output_format(std::string_view name);

// Timing plus error of each representation against zeta_eta at tol = 1e-13.
std::vector<BenchRecord> run_bench(Complex s, std::int64_t b_max, double tol);

struct ChartSeries {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<std::pair<double, double>> points;  // non-positive values are dropped on log axes
};

// Static single-series SVG line chart with labeled, ticked axes.
[[nodiscard]] std::string render_svg(const ChartSeries& chart);

// Executes the command and writes the artifact to config.output_path or `out`. Returns the
// process exit status: 0 on success, 1 for input/domain errors, 2 for numerical failures.
// Diagnostics go to `err` as a single line.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and calls run(). Parse failures exit with 1.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetalab
