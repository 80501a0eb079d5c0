#include "zetalab/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zetalab/claim_auditor.hpp"
#include "zetalab/zero_finder.hpp"

namespace zetalab {

using nlohmann::json;

namespace {

constexpr double kBenchReferenceTolerance = 1e-13;

bool is_number_char(char c) {
    return (c >= '0' && c <= '9') || c == '.' || c == 'e' || c == 'E' || c == '+' || c == '-';
}

// Decimal number with optional leading sign and exponent.
double parse_decimal(std::string_view text, std::string_view whole) {
    auto fail = [&] { return ParseError("malformed complex literal '" + std::string(whole) + "'"); };
    double sign = 1.0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        sign = text.front() == '-' ? -1.0 : 1.0;
        text.remove_prefix(1);
    }
    if (text.empty() || !(std::isdigit(static_cast<unsigned char>(text.front())) || text.front() == '.') ||
        !std::all_of(text.begin(), text.end(), is_number_char)) {
        throw fail();
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw fail();
    }
    return sign * value;
}

std::string shortest(double x) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
    return std::string(buffer, ptr);
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string_view subcommand_name(Subcommand c) {
    switch (c) {
        case Subcommand::Eval:
            return "eval";
        case Subcommand::Zeros:
            return "zeros";
        case Subcommand::Audit:
            return "audit";
        case Subcommand::Check:
            return "check";
        case Subcommand::Bench:
            return "bench";
    }
    return "unknown";
}

// Minimal RFC 4180 writer; every field here is numeric or a plain identifier.
class CsvWriter {
public:
    explicit CsvWriter(std::initializer_list<std::string_view> header) {
        bool first = true;
        for (auto h : header) {
            text_ += first ? "" : ",";
            text_ += h;
            first = false;
        }
        text_ += "\r\n";
    }

    template <class... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((text_ += (first ? "" : ","), text_ += cell(fields), first = false), ...);
        text_ += "\r\n";
    }

    [[nodiscard]] const std::string& str() const { return text_; }

private:
    static std::string cell(double x) { return format_real(x); }
    static std::string cell(std::int64_t x) { return std::to_string(x); }
    static std::string cell(int x) { return std::to_string(x); }
    static std::string cell(std::size_t x) { return std::to_string(x); }
    static std::string cell(std::string_view x) { return std::string(x); }

    std::string text_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string eval_artifact(const CommandConfig& config, Representation rep) {
    const auto result = evaluate(config.s, rep);
    switch (config.output_format) {
        case OutputFormat::Csv: {
            CsvWriter csv({"representation", "s_re", "s_im", "b", "tol", "value_re", "value_im", "est_error",
                           "terms_used"});
            csv.row(to_string(rep.kind), config.s.real(), config.s.imag(), rep.b, rep.tol, result.value.real(),
                    result.value.imag(), result.est_error, result.terms_used);
            return csv.str();
        }
        case OutputFormat::Json:
            return dump(json{{"command", "eval"},
                             {"s", complex_json(config.s)},
                             {"representation", to_string(rep.kind)},
                             {"b", rep.b},
                             {"tol", rep.tol},
                             {"value", complex_json(result.value)},
                             {"est_error", result.est_error},
                             {"terms_used", result.terms_used}});
        case OutputFormat::Svg:
            break;
    }
    throw InputError("svg output is not available for eval (single value)");
}

std::string zeros_artifact(const CommandConfig& config) {
    const double t_min = config.t_min.value_or(0.5);
    const double t_max = config.t_max.value_or(50.0);
    const auto zeros = find_zeros(t_min, t_max, config.tol);
    switch (config.output_format) {
        case OutputFormat::Csv: {
            CsvWriter csv({"index", "sigma", "t", "residual", "residual_finite_b", "est_error", "iterations",
                           "rect_t_min", "rect_t_max"});
            for (std::size_t i = 0; i < zeros.size(); ++i) {
                const auto& z = zeros[i];
                csv.row(i + 1, z.s.real(), z.s.imag(), z.residual, z.residual_finite_b, z.location_error,
                        z.iterations, z.source_rect.t_min, z.source_rect.t_max);
            }
            return csv.str();
        }
        case OutputFormat::Json: {
            json list = json::array();
            for (const auto& z : zeros) {
                list.push_back(json{{"s", complex_json(z.s)},
                                    {"residual", z.residual},
                                    {"residual_finite_b", z.residual_finite_b},
                                    {"est_error", z.location_error},
                                    {"iterations", z.iterations},
                                    {"rect",
                                     {{"sigma_min", z.source_rect.sigma_min},
                                      {"sigma_max", z.source_rect.sigma_max},
                                      {"t_min", z.source_rect.t_min},
                                      {"t_max", z.source_rect.t_max}}}});
            }
            return dump(json{{"command", "zeros"},
                             {"t_min", t_min},
                             {"t_max", t_max},
                             {"tol", config.tol},
                             {"count", zeros.size()},
                             {"zeros", list}});
        }
        case OutputFormat::Svg: {
            ChartSeries chart{"Zero residuals", "t", "|zeta(s)| at refined zero", false, true, {}};
            for (const auto& z : zeros) {
                chart.points.emplace_back(z.s.imag(), z.residual);
            }
            return render_svg(chart);
        }
    }
    return {};
}

std::string audit_artifact(const CommandConfig& config) {
    const auto report = audit(StripPoint(config.s), config.b_max, config.growth);
    switch (config.output_format) {
        case OutputFormat::Csv: {
            CsvWriter csv({"b", "D_re", "D_im", "E_re", "E_im", "DmE_re", "DmE_im", "criterion", "est_error"});
            for (const auto& r : report.rows) {
                csv.row(r.b, r.difference.real(), r.difference.imag(), r.exponential.real(), r.exponential.imag(),
                        r.difference_minus_exponential.real(), r.difference_minus_exponential.imag(), r.criterion,
                        r.est_error);
            }
            return csv.str();
        }
        case OutputFormat::Json: {
            json rows = json::array();
            for (const auto& r : report.rows) {
                rows.push_back(json{{"b", r.b},
                                    {"D", complex_json(r.difference)},
                                    {"E", complex_json(r.exponential)},
                                    {"DmE", complex_json(r.difference_minus_exponential)},
                                    {"criterion", r.criterion},
                                    {"est_error", r.est_error}});
            }
            return dump(json{{"command", "audit"},
                             {"s", complex_json(report.s)},
                             {"b_max", config.b_max},
                             {"growth", config.growth},
                             {"rows", rows},
                             {"limit_estimate", complex_json(report.limit_estimate)},
                             {"limit_est_error", report.limit_est_error},
                             {"reference", complex_json(report.reference)},
                             {"reference_est_error", report.reference_est_error},
                             {"discrepancy", report.discrepancy}});
        }
        case OutputFormat::Svg: {
            ChartSeries chart{"|(D - E)(b) - (zeta(s) - conj zeta(1-s))|", "b", "error", true, true, {}};
            for (const auto& r : report.rows) {
                const double error = std::abs(r.difference_minus_exponential - report.reference);
                if (error > 0.0) {
                    chart.points.emplace_back(static_cast<double>(r.b), error);
                }
            }
            if (chart.points.size() < 2) {
                // D - E vanishes identically (sigma = 1/2): show the criterion instead.
                chart = {"Real criterion b^(1-sigma)/|1-s| - b^sigma/|s|", "b", "criterion", true, false, {}};
                for (const auto& r : report.rows) {
                    chart.points.emplace_back(static_cast<double>(r.b), r.criterion);
                }
            }
            return render_svg(chart);
        }
    }
    return {};
}

std::string check_artifact(const CommandConfig& config) {
    const double t_min = config.t_min.value_or(-30.0);
    const double t_max = config.t_max.value_or(30.0);
    if (!(t_min <= t_max)) {
        throw DomainError("check requires t_min <= t_max");
    }
    constexpr int kSigmaSteps = 9;
    constexpr int kTSteps = 21;

    struct Cell {
        double sigma, t;
        Complex zeta;
        double residual, est_error;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < kSigmaSteps; ++i) {
        for (int j = 0; j < kTSteps; ++j) {
            const double sigma = 0.1 * (i + 1);
            const double t = t_min + (t_max - t_min) * j / (kTSteps - 1);
            const StripPoint s(sigma, t);
            const auto direct = zeta_eta(s.value(), config.tol);
            const auto reflected = zeta_eta(s.reflected().value(), config.tol);
            const Complex chi = chi_factor(s);
            cells.push_back({sigma, t, direct.value, std::abs(direct.value - chi * reflected.value),
                             direct.est_error + std::abs(chi) * reflected.est_error});
        }
    }
    switch (config.output_format) {
        case OutputFormat::Csv: {
            CsvWriter csv({"sigma", "t", "zeta_re", "zeta_im", "residual", "est_error"});
            for (const auto& c : cells) {
                csv.row(c.sigma, c.t, c.zeta.real(), c.zeta.imag(), c.residual, c.est_error);
            }
            return csv.str();
        }
        case OutputFormat::Json: {
            json grid = json::array();
            double worst = 0.0;
            for (const auto& c : cells) {
                worst = std::max(worst, c.residual);
                grid.push_back(json{{"sigma", c.sigma},
                                    {"t", c.t},
                                    {"zeta", complex_json(c.zeta)},
                                    {"residual", c.residual},
                                    {"est_error", c.est_error}});
            }
            return dump(json{{"command", "check"}, {"max_residual", worst}, {"grid", grid}});
        }
        case OutputFormat::Svg: {
            ChartSeries chart{"Functional equation residual (max over sigma)", "t", "residual", false, true, {}};
            for (int j = 0; j < kTSteps; ++j) {
                double worst = 0.0;
                for (int i = 0; i < kSigmaSteps; ++i) {
                    worst = std::max(worst, cells[static_cast<std::size_t>(i * kTSteps + j)].residual);
                }
                chart.points.emplace_back(cells[static_cast<std::size_t>(j)].t, worst);
            }
            return render_svg(chart);
        }
    }
    return {};
}

std::string bench_artifact(const CommandConfig& config) {
    const auto records = run_bench(config.s, config.b_max, config.tol);
    switch (config.output_format) {
        case OutputFormat::Csv: {
            CsvWriter csv({"representation", "b", "terms_used", "wall_time", "abs_error_vs_reference", "est_error"});
            for (const auto& r : records) {
                csv.row(to_string(r.representation.kind), r.representation.b, r.terms_used, r.wall_time,
                        r.abs_error_vs_reference, r.est_error);
            }
            return csv.str();
        }
        case OutputFormat::Json: {
            json list = json::array();
            for (const auto& r : records) {
                list.push_back(json{{"representation", to_string(r.representation.kind)},
                                    {"b", r.representation.b},
                                    {"terms_used", r.terms_used},
                                    {"wall_time", r.wall_time},
                                    {"abs_error_vs_reference", r.abs_error_vs_reference},
                                    {"est_error", r.est_error}});
            }
            return dump(json{{"command", "bench"}, {"s", complex_json(config.s)}, {"records", list}});
        }
        case OutputFormat::Svg: {
            ChartSeries chart{"Error vs terms", "terms used", "abs error vs reference", true, true, {}};
            for (const auto& r : records) {
                chart.points.emplace_back(static_cast<double>(r.terms_used), r.abs_error_vs_reference);
            }
            std::sort(chart.points.begin(), chart.points.end());
            return render_svg(chart);
        }
    }
    return {};
}

std::string escape_xml(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string fixed(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", x);
    return buffer;
}

std::string tick_label(double v, bool log_axis) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3g", log_axis ? std::pow(10.0, v) : v);
    return buffer;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty complex literal");
    }
    if (text.back() != 'i') {
        return {parse_decimal(text, text), 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // The imaginary part starts at the last sign that is not the first character and not
    // part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0.0, parse_decimal(body, text)};
    }
    return {parse_decimal(body.substr(0, split), text), parse_decimal(body.substr(split), text)};
}

std::string format_complex(Complex z) {
    const bool negative = std::signbit(z.imag());
    return shortest(z.real()) + (negative ? "-" : "+") + shortest(std::abs(z.imag())) + "i";
}

std::string format_real(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

Subcommand parse_subcommand(std::string_view name) {
    for (auto c : {Subcommand::Eval, Subcommand::Zeros, Subcommand::Audit, Subcommand::Check, Subcommand::Bench}) {
        if (name == subcommand_name(c)) {
            return c;
        }
    }
    throw ParseError("unknown subcommand '" + std::string(name) + "'");
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "svg") return OutputFormat::Svg;
    throw ParseError("unknown output format '" + std::string(name) + "' (expected csv, json or svg)");
}

std::vector<BenchRecord> run_bench(Complex s, std::int64_t b_max, double tol) {
    const Complex reference = zeta_eta(s, kBenchReferenceTolerance).value;
    std::vector<Representation> reps;
    if (s.real() > 1.0) {
        reps.push_back({RepresentationKind::DirectSeries, 1, tol});
    }
    reps.push_back({RepresentationKind::EtaAccelerated, 1, tol});
    if (StripPoint::contains(s)) {
        for (std::int64_t b = 10; b <= b_max; b *= 10) {
            reps.push_back({RepresentationKind::TruncatedLimit, b, tol});
        }
        for (std::int64_t b : {1, 37, 1000}) {
            if (b <= b_max) {
                reps.push_back({RepresentationKind::FiniteBExact, b, tol});
            }
        }
    }
    std::vector<BenchRecord> records;
    for (const auto& rep : reps) {
        const auto start = std::chrono::steady_clock::now();
        const auto result = evaluate(s, rep);
        const auto stop = std::chrono::steady_clock::now();
        records.push_back({rep, result.terms_used, std::chrono::duration<double>(stop - start).count(),
                           std::abs(result.value - reference), result.est_error});
    }
    return records;
}

std::string render_svg(const ChartSeries& chart) {
    constexpr double kWidth = 640, kHeight = 400;
    constexpr double kLeft = 80, kRight = 20, kTop = 40, kBottom = 60;
    constexpr int kTicks = 5;

    std::vector<std::pair<double, double>> pts;
    for (auto [x, y] : chart.points) {
        if ((chart.log_x && !(x > 0)) || (chart.log_y && !(y > 0)) || !std::isfinite(x) || !std::isfinite(y)) {
            continue;
        }
        pts.emplace_back(chart.log_x ? std::log10(x) : x, chart.log_y ? std::log10(y) : y);
    }
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!pts.empty()) {
        x0 = x1 = pts.front().first;
        y0 = y1 = pts.front().second;
        for (auto [x, y] : pts) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
    if (x1 - x0 <= 0) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if (y1 - y0 <= 0) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * plot_w; };
    auto py = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * plot_h; };

    std::ostringstream svg;
    svg << R"(<svg xmlns="http://www.w3.org/2000/svg" width="640" height="400" viewBox="0 0 640 400">)" << "\n";
    svg << R"(<rect width="640" height="400" fill="white"/>)" << "\n";
    svg << R"(<text x="320" y="24" text-anchor="middle" font-family="sans-serif" font-size="14">)"
        << escape_xml(chart.title) << "</text>\n";
    svg << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(kTop + plot_h) << "\" x2=\"" << fixed(kLeft + plot_w)
        << "\" y2=\"" << fixed(kTop + plot_h) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(kTop) << "\" x2=\"" << fixed(kLeft) << "\" y2=\""
        << fixed(kTop + plot_h) << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= kTicks; ++i) {
        const double xv = x0 + (x1 - x0) * i / kTicks;
        const double yv = y0 + (y1 - y0) * i / kTicks;
        svg << "<line x1=\"" << fixed(px(xv)) << "\" y1=\"" << fixed(kTop + plot_h) << "\" x2=\"" << fixed(px(xv))
            << "\" y2=\"" << fixed(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << fixed(kTop + plot_h + 18)
            << R"(" text-anchor="middle" font-family="sans-serif" font-size="10">)" << tick_label(xv, chart.log_x)
            << "</text>\n";
        svg << "<line x1=\"" << fixed(kLeft - 5) << "\" y1=\"" << fixed(py(yv)) << "\" x2=\"" << fixed(kLeft)
            << "\" y2=\"" << fixed(py(yv)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fixed(kLeft - 8) << "\" y=\"" << fixed(py(yv) + 3)
            << R"(" text-anchor="end" font-family="sans-serif" font-size="10">)" << tick_label(yv, chart.log_y)
            << "</text>\n";
    }
    svg << "<text x=\"" << fixed(kLeft + plot_w / 2) << "\" y=\"" << fixed(kHeight - 15)
        << R"(" text-anchor="middle" font-family="sans-serif" font-size="12">)"
        << escape_xml(chart.x_label + (chart.log_x ? " (log)" : "")) << "</text>\n";
    svg << "<text x=\"18\" y=\"" << fixed(kTop + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << fixed(kTop + plot_h / 2) << R"svg()" font-family="sans-serif" font-size="12">)svg"
        << escape_xml(chart.y_label + (chart.log_y ? " (log)" : "")) << "</text>\n";
    svg << R"(<polyline fill="none" stroke="steelblue" stroke-width="1.5" points=")";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        svg << (i ? " " : "") << fixed(px(pts[i].first)) << "," << fixed(py(pts[i].second));
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (!(config.tol > 0.0) || !std::isfinite(config.tol)) {
            throw DomainError("tol must be a positive number");
        }
        Representation rep = config.rep;
        rep.tol = config.tol;

        std::string artifact;
        switch (config.subcommand) {
            case Subcommand::Eval:
                artifact = eval_artifact(config, rep);
                break;
            case Subcommand::Zeros:
                artifact = zeros_artifact(config);
                break;
            case Subcommand::Audit:
                artifact = audit_artifact(config);
                break;
            case Subcommand::Check:
                artifact = check_artifact(config);
                break;
            case Subcommand::Bench:
                artifact = bench_artifact(config);
                break;
        }
        if (config.output_path) {
            std::ofstream file(*config.output_path, std::ios::binary);
            if (!file) {
                throw InputError("cannot open output path '" + *config.output_path + "'");
            }
            file << artifact;
        } else {
            out << artifact;
        }
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace zetalab
