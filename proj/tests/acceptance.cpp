// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pmatch/pmatch.hpp"

using namespace pmatch;

namespace {

struct outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

point_set make(generator_kind kind, std::size_t n, std::uint64_t seed) {
    generator_spec spec;
    spec.kind = kind;
    spec.n = n;
    spec.seed = seed;
    return generate(spec);
}

std::string describe(generator_kind kind, std::size_t n, std::uint64_t seed) {
    return std::string(to_string(kind)) + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

witness_options quiet() { return witness_options{engine_options{}, nullptr}; }

engine_options no_fast_path() {
    engine_options o;
    o.convex_fast_path = false;
    return o;
}

std::vector<point> raw(const point_set& s) { return {s.begin(), s.end()}; }

// Piercing property decided from the oracle's own hull and pierce predicates.
bool oracle_piercing(const matching& m, const point_set& s) {
    const auto pts = raw(s);
    const auto interior = oracle::interior_points(pts);
    auto on_hull = [&](std::size_t i) { return std::find(interior.begin(), interior.end(), i) == interior.end(); };
    for (const auto& [a, b] : m.pairs)
        for (const auto& [c, d] : m.pairs)
            if (!(a == c && b == d) && oracle::pierces(pts[a], pts[b], pts[c], pts[d]) && (on_hull(a) || on_hull(b)))
                return true;
    return false;
}

outcome catalan_baseline() {
    outcome r;
    const std::vector<long> expected{1, 2, 5, 14, 42, 132, 429, 1430};
    for (std::size_t k = 1; k <= 8; ++k) {
        const point_set s = make(generator_kind::convex, 2 * k, k);
        const big_int pm = count_matchings(s, no_fast_path());
        r.require(pm == expected[k - 1], "k=" + std::to_string(k) + " pm=" + pm.str());
        r.require(expected[k - 1] == oracle::catalan_closed_form(k), "closed form k=" + std::to_string(k));
    }
    return r;
}

outcome exceptional_configuration() {
    outcome r;
    const point_set e = make(generator_kind::exceptional, 6, 0);
    r.require(count_matchings(e, no_fast_path()) == 5, "pm != 5");
    const auto ms = enumerate_matchings(e);
    r.require(ms.size() == 5, "enumeration size");
    r.require(oracle::plane_matchings(raw(e)).size() == 5, "oracle count");
    const std::size_t center = convex_hull(e).interior.front();
    for (const auto& m : ms) {
        bool center_segment = false;
        for (const auto& [a, b] : m.pairs) center_segment |= a == center || b == center;
        r.require(center_segment, "matching without a center segment: " + format_matching(m));
        r.require(!has_piercing_property(m, e), "piercing matching: " + format_matching(m));
        r.require(!oracle_piercing(m, e), "oracle finds piercing: " + format_matching(m));
    }
    const auto w = build_witness(e, quiet());
    r.require(!w.found() && w.reason == no_witness_reason::exceptional_six, "build_witness did not report exceptional_six");
    return r;
}

// Mixed seeded corpus with n in {4,...,12}.
struct sample {
    generator_kind kind;
    std::size_t n;
    std::uint64_t seed;
    point_set s;
};

std::vector<sample> corpus(std::size_t count, const std::vector<generator_kind>& kinds, std::uint64_t base) {
    std::vector<sample> out;
    for (std::size_t t = 0; t < count; ++t) {
        const generator_kind kind = kinds[t % kinds.size()];
        const std::size_t n = std::max<std::size_t>(minimum_size(kind), 4 + 2 * ((t / kinds.size()) % 5));
        const std::uint64_t seed = base + t;
        point_set s = make(kind, n, seed);  // the exceptional kind ignores n
        out.push_back({kind, s.size(), seed, std::move(s)});
    }
    return out;
}

outcome lower_bound(const std::vector<sample>& sets) {
    outcome r;
    for (const auto& [kind, n, seed, s] : sets) {
        const big_int pm = count_matchings(s);
        const big_int ck = catalan(n / 2);
        const std::string where = describe(kind, n, seed);
        r.require(pm == oracle::plane_matchings(raw(s)).size(), where + ": pm disagrees with oracle");
        r.require(pm >= ck, where + ": pm below Catalan");
        const classification c = classify(s);
        const bool exempt = c == classification::convex || c == classification::exceptional_six;
        r.require((pm == ck) == exempt, where + ": equality with tag " + std::string(to_string(c)));
    }
    return r;
}

outcome sandwich(const std::vector<sample>& sets) {
    outcome r;
    for (const auto& [kind, n, seed, s] : sets) {
        const big_int g = gnt_lower_bound(s);
        const big_int pm = count_matchings(s, no_fast_path());
        const big_int ck = catalan(n / 2);
        const std::string where = describe(kind, n, seed);
        r.require(ck <= g && g <= pm, where + ": sandwich violated");
        if (is_convex_position(s)) r.require(g == pm && pm == ck, where + ": convex set not tight");
    }
    return r;
}

outcome witness_soundness(const std::vector<sample>& sets, std::size_t& tested) {
    outcome r;
    tested = 0;
    for (const auto& [kind, n, seed, s] : sets) {
        const classification c = classify(s);
        if (c != classification::generic) continue;
        ++tested;
        const std::string where = describe(kind, n, seed);
        const auto w = build_witness(s, quiet());
        const auto brute = exists_piercing_matching(s);
        r.require(w.found() == brute.has_value(), where + ": witness presence differs from exhaustive search");
        r.require(w.found(), where + ": generic set without witness");
        if (!w.found()) continue;
        r.require(is_valid_matching(*w.witness, s), where + ": witness is not a plane perfect matching");
        r.require(has_piercing_property(*w.witness, s), where + ": witness lacks the piercing property");
        r.require(oracle_piercing(*w.witness, s), where + ": oracle rejects the witness");
        r.require(count_matchings(s) > catalan(n / 2), where + ": witness but pm == Catalan");
    }
    r.require(tested >= 500, "only " + std::to_string(tested) + " generic sets");
    return r;
}

outcome case_coverage(std::string& note) {
    outcome r;
    struct stratum {
        witness_case tag;
        std::size_t n;
    };
    const stratum strata[] = {{witness_case::even_k, 4},        {witness_case::even_k, 8},
                              {witness_case::odd_k_delta2, 6},  {witness_case::odd_k_delta2, 10},
                              {witness_case::k3_brute_force, 6}};
    std::ostringstream summary;
    for (const auto& [tag, n] : strata) {
        std::size_t hits = 0, fallbacks = 0;
        for (std::uint64_t seed = 0; seed < 20000 && hits < 20; ++seed) {
            const point_set s = make(generator_kind::one_interior, n, seed);
            const auto w = build_witness(s, quiet());
            if (!w.trace || w.trace->case_tag != tag) continue;
            if (w.found()) {
                r.require(has_piercing_property(*w.witness, s), describe(generator_kind::one_interior, n, seed));
            } else {
                r.require(is_exceptional_six(s), describe(generator_kind::one_interior, n, seed) + ": no witness");
            }
            ++hits;
            fallbacks += w.trace->oracle_fallback;
        }
        summary << to_string(tag) << "@" << n << "=" << hits << " ";
        r.require(hits >= 20, std::string(to_string(tag)) + " at n=" + std::to_string(n) + " hit " +
                                  std::to_string(hits) + " times");
        if (tag != witness_case::k3_brute_force)
            r.require(fallbacks == 0, std::string(to_string(tag)) + " used the exhaustive fallback");
    }
    std::size_t halving = 0;
    for (std::size_t n : {10u, 14u}) {
        for (std::uint64_t seed = 0; seed < 3000; ++seed) {
            const point_set s = make(generator_kind::one_interior, n, seed);
            const auto w = build_witness(s, quiet());
            if (w.trace->case_tag != witness_case::odd_k_all_halving) continue;
            ++halving;
            r.require(w.found() && has_piercing_property(*w.witness, s) && !w.trace->oracle_fallback,
                      describe(generator_kind::one_interior, n, seed) + ": all-halving witness invalid");
        }
    }
    summary << "odd_k_all_halving(random)=" << halving;
    note = summary.str();
    return r;
}

outcome determinism() {
    outcome r;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (auto kind : {generator_kind::random_disk, generator_kind::one_interior, generator_kind::many_interior}) {
            const std::size_t n = 6 + 2 * (seed % 3);
            auto produce = [&] {
                const point_set s = make(kind, n, seed);
                const auto w = build_witness(s, quiet());
                std::string out = write_report(verify_main_theorem(s, quiet()));
                out += to_json(w, true).dump(2);
                out += w.found() ? render_svg(s, w.witness, w.trace->pierce) : render_svg(s);
                return out;
            };
            r.require(produce() == produce(), describe(kind, n, seed) + ": outputs differ");
        }
    }
    experiment_config c;
    c.trials = 80;
    c.n_min = 4;
    c.n_max = 12;
    c.seed = 11;
    c.kinds = {generator_kind::random_disk, generator_kind::one_interior, generator_kind::many_interior,
               generator_kind::exceptional};
    const std::string first = write_report(run_experiment(c), report_format::json, false);
    r.require(first == write_report(run_experiment(c), report_format::json, false), "summary differs across runs");
    c.threads = 4;
    r.require(first == write_report(run_experiment(c), report_format::json, false), "summary depends on threads");
    return r;
}

bool report(int id, const std::string& name, double limit_s, const std::function<outcome()>& body,
            const std::string& extra = {}) {
    const auto start = std::chrono::steady_clock::now();
    outcome r = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s)
        r.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
    std::printf("%s criterion %d: %s (%.2f s)", r.ok ? "PASS" : "FAIL", id, name.c_str(), secs);
    if (!r.ok) std::printf(" -- %s", r.detail.c_str());
    if (r.ok && !extra.empty()) std::printf(" [%s]", extra.c_str());
    std::printf("\n");
    std::fflush(stdout);
    return r.ok;
}

}  // namespace

int main() {
    bool ok = true;
    ok &= report(1, "convex sets count 1, 2, 5, 14, 42, 132, 429, 1430", 5, catalan_baseline);
    ok &= report(2, "exceptional six-point set", 1, exceptional_configuration);

    const std::vector<sample> mixed =
        corpus(600,
               {generator_kind::random_disk, generator_kind::one_interior, generator_kind::many_interior,
                generator_kind::convex, generator_kind::exceptional},
               1000);
    ok &= report(3, "pm >= C_k on 600 sets, equality only for convex or exceptional", 120,
                 [&] { return lower_bound(mixed); });
    ok &= report(4, "C_k <= gnt <= pm, tight on convex sets", 0, [&] { return sandwich(mixed); });

    const std::vector<sample> generic = corpus(
        600, {generator_kind::random_disk, generator_kind::one_interior, generator_kind::many_interior}, 50000);
    std::size_t tested = 0;
    std::string tested_note;
    ok &= report(
        5, "witness soundness and exhaustive-search equivalence", 180,
        [&] {
            outcome r = witness_soundness(generic, tested);
            tested_note = std::to_string(tested) + " generic sets";
            return r;
        },
        tested_note);
    std::string coverage;
    ok &= report(6, "one-interior case coverage", 0, [&] { return case_coverage(coverage); }, coverage);
    ok &= report(7, "byte-identical reports, SVG and summaries", 0, determinism);
    return ok ? 0 : 1;
}
