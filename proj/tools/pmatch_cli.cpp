// pmatch: command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 inconsistency detected.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pmatch/pmatch.hpp"

namespace {

using namespace pmatch;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_inconsistent = 2;

struct globals {
    std::optional<std::size_t> max_enum;
    bool strict_gp = false;

    engine_options engine() const {
        engine_options o;
        if (max_enum) {
            o.enumerate_cap = *max_enum;
            o.count_cap = *max_enum;
        }
        return o;
    }
    witness_options witness() const { return witness_options{engine(), &std::cerr}; }
    validation_options validation() const {
        validation_options v;
        v.strict = strict_gp;
        return v;
    }
};

void write_file(const std::string& path, const std::string& contents) {
    if (path == "-") {
        std::cout << contents;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::invalid_argument, "cannot write " + path);
    out << contents;
}

report_format parse_format(const std::string& name) {
    return name == "csv" ? report_format::csv : report_format::json;
}

std::vector<generator_kind> parse_kinds(const std::string& list) {
    std::vector<generator_kind> kinds;
    std::stringstream in(list);
    std::string name;
    while (std::getline(in, name, ',')) {
        const auto kind = parse_generator_kind(name);
        if (!kind) throw error(errc::invalid_argument, "unknown generator kind '" + name + "'");
        kinds.push_back(*kind);
    }
    if (kinds.empty()) throw error(errc::invalid_argument, "empty --kinds list");
    return kinds;
}

int cmd_gen(const std::string& kind_name, const generator_spec& base, const std::string& output) {
    generator_spec spec = base;
    const auto kind = parse_generator_kind(kind_name);
    if (!kind) throw error(errc::invalid_argument, "unknown generator kind '" + kind_name + "'");
    spec.kind = *kind;
    write_file(output, format_point_set(generate(spec)));
    return exit_ok;
}

int cmd_count(const globals& g, const std::string& input, const std::string& format) {
    const point_set s = read_point_set(input, g.validation());
    detail::require_even(s);
    const big_int pm = count_matchings(s, g.engine());
    const big_int ck = catalan(s.size() / 2);
    const big_int gnt = gnt_lower_bound(s);
    if (format == "json") {
        json j;
        j["n"] = s.size();
        j["k"] = s.size() / 2;
        j["pm"] = to_json(pm);
        j["catalan_k"] = to_json(ck);
        j["gnt"] = to_json(gnt);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "pm " << pm << "\ncatalan_k " << ck << "\ngnt " << gnt << "\n";
    }
    return exit_ok;
}

int cmd_enumerate(const globals& g, const std::string& input, std::optional<std::size_t> limit) {
    const point_set s = read_point_set(input, g.validation());
    if (limit) {
        std::size_t printed = 0;
        if (*limit == 0) return exit_ok;
        for_each_matching(s, [&](const matching& m) {
            std::cout << format_matching(m) << "\n";
            return ++printed < *limit;
        });
        return exit_ok;
    }
    for (const matching& m : enumerate_matchings(s, g.engine())) std::cout << format_matching(m) << "\n";
    return exit_ok;
}

int cmd_witness(const globals& g, const std::string& input, bool trace, const std::string& format) {
    const point_set s = read_point_set(input, g.validation());
    const witness_result w = build_witness(s, g.witness());
    if (format == "json") {
        std::cout << to_json(w, trace).dump(2) << "\n";
        return exit_ok;
    }
    if (w.found()) {
        std::cout << format_matching(*w.witness) << "\n";
    } else {
        std::cout << "none: " << to_string(*w.reason) << "\n";
    }
    if (trace && w.trace) {
        const json fields = to_json(*w.trace);
        for (const auto& [key, value] : fields.items()) std::cout << key << " " << value.dump() << "\n";
    }
    return exit_ok;
}

int cmd_classify(const globals& g, const std::string& input) {
    std::cout << to_string(classify(read_point_set(input, g.validation()))) << "\n";
    return exit_ok;
}

struct verify_args {
    std::string input;
    std::size_t trials = 0;
    std::size_t n_min = 4;
    std::size_t n_max = 10;
    std::uint64_t seed = 0;
    std::string kinds = "random";
    std::string format = "json";
    std::size_t threads = 1;
    bool no_timings = false;
};

int cmd_verify(const globals& g, const verify_args& a) {
    const report_format format = parse_format(a.format);
    if (!a.input.empty()) {
        const theorem_report r = verify_main_theorem(read_point_set(a.input, g.validation()), g.witness());
        std::cout << write_report(r, format);
        return r.consistent ? exit_ok : exit_inconsistent;
    }
    experiment_config c;
    c.trials = a.trials;
    c.n_min = a.n_min;
    c.n_max = a.n_max;
    c.seed = a.seed;
    c.kinds = parse_kinds(a.kinds);
    c.threads = a.threads;
    c.witness = witness_options{g.engine(), nullptr};
    const experiment_summary summary = run_experiment(c);
    std::cout << write_report(summary, format, !a.no_timings);
    return summary.failures.empty() ? exit_ok : exit_inconsistent;
}

int cmd_svg(const globals& g, const std::string& input, const std::string& matching_file, bool highlight,
            const std::string& output) {
    const point_set s = read_point_set(input, g.validation());
    std::optional<matching> m;
    std::optional<piercing_pair> pierce;
    if (!matching_file.empty()) {
        m = read_matching(matching_file);
        validate_matching(*m, s);
        if (highlight) pierce = find_piercing_pair(*m, s);
    } else if (highlight) {
        const witness_result w = build_witness(s, g.witness());
        if (w.found()) {
            m = w.witness;
            pierce = w.trace->pierce;
        } else {
            std::cerr << "no witness: " << to_string(*w.reason) << "\n";
        }
    }
    write_file(output, render_svg(s, m, pierce));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-crossing perfect matchings of planar point sets"};
    app.require_subcommand(1);
    globals g;
    app.add_option("--max-enum", g.max_enum, "Largest n for enumeration and exact counting");
    app.add_flag("--strict-gp", g.strict_gp, "Always run the full general-position scan");

    std::string input, output, format = "text";

    auto* gen = app.add_subcommand("gen", "Generate a point set");
    std::string kind;
    generator_spec spec;
    gen->add_option("--kind", kind, "convex|random|one-interior|many-interior|exceptional")->required();
    gen->add_option("--n", spec.n, "Number of points (even)")->required();
    gen->add_option("--seed", spec.seed, "Generator seed")->required();
    gen->add_option("--radius", spec.radius, "Sampling radius");
    gen->add_option("-o,--output", output, "Output file, '-' for stdout")->required();

    auto* count = app.add_subcommand("count", "Count matchings and lower bounds");
    count->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);
    count->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* enumerate = app.add_subcommand("enumerate", "List matchings, one per line");
    std::optional<std::size_t> limit;
    enumerate->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);
    enumerate->add_option("--limit", limit, "Stop after this many matchings");

    auto* witness = app.add_subcommand("witness", "Build a matching with the piercing property");
    bool trace = false;
    witness->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);
    witness->add_flag("--trace", trace, "Include the construction trace");
    witness->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* classify_cmd = app.add_subcommand("classify", "convex, exceptional_six or generic");
    classify_cmd->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);

    auto* verify = app.add_subcommand("verify", "Check the lower-bound statement on a file or a batch");
    verify_args va;
    auto* v_input = verify->add_option("-i,--input", va.input)->check(CLI::ExistingFile);
    auto* v_trials = verify->add_option("--trials", va.trials);
    verify->add_option("--n-min", va.n_min)->needs(v_trials);
    verify->add_option("--n-max", va.n_max)->needs(v_trials);
    verify->add_option("--seed", va.seed)->needs(v_trials);
    verify->add_option("--kinds", va.kinds, "Comma-separated generator kinds")->needs(v_trials);
    verify->add_option("--threads", va.threads)->needs(v_trials);
    verify->add_flag("--no-timings", va.no_timings, "Omit wall-clock timings from the summary");
    verify->add_option("--format", va.format)->check(CLI::IsMember({"json", "csv"}));
    v_input->excludes(v_trials);

    auto* svg = app.add_subcommand("svg", "Render a point set as SVG");
    std::string matching_file;
    bool highlight = false;
    svg->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);
    svg->add_option("-m,--matching", matching_file)->check(CLI::ExistingFile);
    svg->add_flag("--highlight", highlight, "Draw the piercing line of a witness");
    svg->add_option("-o,--output", output)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen->parsed()) return cmd_gen(kind, spec, output);
        if (count->parsed()) return cmd_count(g, input, format);
        if (enumerate->parsed()) return cmd_enumerate(g, input, limit);
        if (witness->parsed()) return cmd_witness(g, input, trace, format);
        if (classify_cmd->parsed()) return cmd_classify(g, input);
        if (verify->parsed()) {
            if (va.input.empty() && v_trials->count() == 0) {
                std::cerr << "verify: give -i FILE or --trials\n";
                return exit_usage;
            }
            return cmd_verify(g, va);
        }
        if (svg->parsed()) return cmd_svg(g, input, matching_file, highlight, output);
    } catch (const error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return e.code() == errc::internal_inconsistency ? exit_inconsistent : exit_usage;
    }
    return exit_usage;
}
