#pragma once

// JSON and CSV emission. Keys are snake_case and emitted in a fixed order;
// arbitrary-precision counts are decimal strings.
//
// Report CSV header: n,k,pm,catalan_k,gnt,classification,witness_found,consistent
// Summary CSV header: seed,n,kind,check (one row per failure).

#include <optional>
#include <string>

#include <json.hpp>

#include "pmatch/classify.hpp"
#include "pmatch/experiment.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/witness.hpp"

namespace pmatch {

using json = nlohmann::ordered_json;

enum class report_format { json, csv };

inline json to_json(const big_int& v) { return v.str(); }

inline json to_json(const matching& m) {
    json pairs = json::array();
    for (const auto& [a, b] : m.pairs) pairs.push_back({a, b});
    return pairs;
}

inline json to_json(const theorem_report& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["pm"] = r.pm ? to_json(*r.pm) : json(nullptr);
    j["catalan_k"] = to_json(r.catalan_k);
    j["gnt"] = to_json(r.gnt);
    j["classification"] = std::string(to_string(r.tag));
    j["witness_found"] = r.witness_found;
    j["consistent"] = r.consistent;
    j["failed_checks"] = r.failed_checks;
    j["skipped_checks"] = r.skipped_checks;
    return j;
}

inline json to_json(const witness_trace& t) {
    auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
    auto seg = [](const std::optional<segment>& s) { return s ? json{s->first, s->second} : json(nullptr); };
    json j;
    j["case_tag"] = std::string(to_string(t.case_tag));
    j["q"] = opt(t.q);
    j["j0"] = opt(t.j0);
    j["delta"] = opt(t.delta);
    j["r"] = opt(t.r);
    j["r_prime"] = opt(t.r_prime);
    j["s1"] = opt(t.s1);
    j["s2"] = opt(t.s2);
    j["exit_edge"] = seg(t.exit_edge);
    j["labels"] = t.labels;
    j["piercing_pair"] = t.pierce ? json{{t.pierce->piercer.first, t.pierce->piercer.second},
                                         {t.pierce->pierced.first, t.pierce->pierced.second}}
                                  : json(nullptr);
    j["oracle_fallback"] = t.oracle_fallback;
    return j;
}

inline json to_json(const witness_result& w, bool with_trace) {
    json j;
    j["found"] = w.found();
    j["reason"] = w.reason ? json(std::string(to_string(*w.reason))) : json(nullptr);
    j["matching"] = w.witness ? to_json(*w.witness) : json(nullptr);
    if (with_trace) j["trace"] = w.trace ? to_json(*w.trace) : json(nullptr);
    return j;
}

inline json to_json(const experiment_summary& s, bool include_timings = true) {
    json j;
    j["trials"] = s.trials;
    j["n_range"] = {s.n_min, s.n_max};
    json failures = json::array();
    for (const auto& f : s.failures) {
        json e;
        e["seed"] = f.seed;
        e["n"] = f.n;
        e["kind"] = std::string(to_string(f.kind));
        e["check"] = f.check;
        failures.push_back(std::move(e));
    }
    j["failures"] = std::move(failures);
    if (include_timings) {
        j["timings"] = {{"total_ms", s.timings.total_ms},
                        {"min_ms", s.timings.min_ms},
                        {"max_ms", s.timings.max_ms},
                        {"mean_ms", s.timings.mean_ms}};
    }
    return j;
}

inline std::string write_report(const theorem_report& r, report_format format = report_format::json) {
    if (format == report_format::json) return to_json(r).dump(2) + "\n";
    std::string out = "n,k,pm,catalan_k,gnt,classification,witness_found,consistent\n";
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + (r.pm ? r.pm->str() : std::string()) + "," +
           r.catalan_k.str() + "," + r.gnt.str() + "," + std::string(to_string(r.tag)) + "," +
           (r.witness_found ? "true" : "false") + "," + (r.consistent ? "true" : "false") + "\n";
    return out;
}

inline std::string write_report(const experiment_summary& s, report_format format, bool include_timings = true) {
    if (format == report_format::json) return to_json(s, include_timings).dump(2) + "\n";
    std::string out = "seed,n,kind,check\n";
    for (const auto& f : s.failures)
        out += std::to_string(f.seed) + "," + std::to_string(f.n) + "," + std::string(to_string(f.kind)) + "," +
               f.check + "\n";
    return out;
}

}  // namespace pmatch
