#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "zetalab/parallel.hpp"
#include "zetalab/report.hpp"

namespace zetalab {

namespace {

struct RawOptions {
    std::string s;
    std::string rep = "eta";
    std::int64_t b = 1;
    std::int64_t b_max = 1'000'000;
    double tol = kDefaultTolerance;
    std::optional<double> t_min;
    std::optional<double> t_max;
    double growth = 2.0;
    std::string output_format = "csv";
    std::string output_path;
};

void add_common(CLI::App& cmd, RawOptions& raw) {
    cmd.add_option("--tol", raw.tol, "Tolerance (default 1e-12)");
    cmd.add_option("--output-format", raw.output_format, "csv, json or svg (default csv)");
    cmd.add_option("--output-path", raw.output_path, "Write the artifact here instead of stdout");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"zetalab: Riemann zeta evaluation, zero finding and limit audits in the critical strip"};
    app.require_subcommand(1);
    RawOptions raw;

    auto* eval = app.add_subcommand("eval", "Evaluate zeta(s) with one representation");
    eval->add_option("--s", raw.s, "Point, e.g. 0.5+14.2i")->required();
    eval->add_option("--rep", raw.rep, "direct, eta, truncated or finite-b (default eta)");
    eval->add_option("--b", raw.b, "Truncation index for truncated / finite-b (default 1)");
    add_common(*eval, raw);

    auto* zeros = app.add_subcommand("zeros", "Locate nontrivial zeros with t in [t-min, t-max]");
    zeros->add_option("--t-min", raw.t_min, "Lower t (default 0.5)");
    zeros->add_option("--t-max", raw.t_max, "Upper t (default 50)");
    add_common(*zeros, raw);

    auto* audit = app.add_subcommand("audit", "Tabulate D(b,s), E(b,s) and the real criterion");
    audit->add_option("--s", raw.s, "Strip point")->required();
    audit->add_option("--b-max", raw.b_max, "Largest b (default 1e6)");
    audit->add_option("--growth", raw.growth, "Geometric b spacing (default 2)");
    add_common(*audit, raw);

    auto* check = app.add_subcommand("check", "Functional-equation residual on a 9 x 21 strip grid");
    check->add_option("--t-min", raw.t_min, "Lower t (default -30)");
    check->add_option("--t-max", raw.t_max, "Upper t (default 30)");
    add_common(*check, raw);

    auto* bench = app.add_subcommand("bench", "Time each representation against the eta reference");
    bench->add_option("--s", raw.s, "Point (default 0.5+14i)");
    bench->add_option("--b-max", raw.b_max, "Largest truncation index (default 1e6)");
    add_common(*bench, raw);

    CommandConfig config;
    try {
        app.parse(argc, argv);
        config.subcommand = parse_subcommand(app.get_subcommands().front()->get_name());
        if (!raw.s.empty()) {
            config.s = parse_complex(raw.s);
        }
        config.rep.kind = parse_representation(raw.rep);
        config.rep.b = raw.b;
        config.b_max = raw.b_max;
        config.tol = raw.tol;
        config.t_min = raw.t_min;
        config.t_max = raw.t_max;
        config.growth = raw.growth;
        config.output_format = parse_output_format(raw.output_format);
        if (!raw.output_path.empty()) {
            config.output_path = raw.output_path;
        }
        thread_count();  // validates ZETALAB_THREADS up front
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return run(config, out, err);
}

}  // namespace zetalab
