#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmatch/error.hpp"
#include "pmatch/geometry.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/witness.hpp"

namespace pmatch {

enum class classification { convex, exceptional_six, generic };

constexpr std::string_view to_string(classification c) noexcept {
    switch (c) {
        case classification::convex: return "convex";
        case classification::exceptional_six: return "exceptional_six";
        case classification::generic: return "generic";
    }
    return "unknown";
}

/// Six points, one interior point Q, and every line through Q and a hull
/// vertex leaves two points on each side.
inline bool is_exceptional_six(const point_set& s) {
    if (s.size() != 6) return false;
    const hull_labeling h = convex_hull(s);
    if (h.interior.size() != 1) return false;
    const std::size_t q = h.interior.front();
    for (std::size_t v : h.hull)
        if (side_counts(s, q, v) != side_count{2, 2}) return false;
    return true;
}

inline classification classify(const point_set& s) {
    detail::require_even(s);
    if (s.size() < 2) throw error(errc::invalid_argument, "classify needs at least 2 points");
    if (s.size() == 2 || is_convex_position(s)) return classification::convex;
    if (is_exceptional_six(s)) return classification::exceptional_six;
    return classification::generic;
}

struct theorem_report {
    std::size_t n = 0;
    std::size_t k = 0;
    /// Absent when n exceeds the count cap.
    std::optional<big_int> pm;
    big_int catalan_k;
    big_int gnt;
    classification tag = classification::convex;
    bool witness_found = false;
    bool consistent = false;
    std::vector<std::string> failed_checks;
    std::vector<std::string> skipped_checks;
};

/// Check labels used in theorem_report::failed_checks / skipped_checks.
namespace check {
inline constexpr std::string_view pm_at_least_catalan = "pm_at_least_catalan";
inline constexpr std::string_view gnt_at_least_catalan = "gnt_at_least_catalan";
inline constexpr std::string_view gnt_at_most_pm = "gnt_at_most_pm";
inline constexpr std::string_view equality_iff_exempt = "equality_iff_convex_or_exceptional";
inline constexpr std::string_view witness_iff_generic = "witness_iff_generic";
inline constexpr std::string_view witness_implies_strict = "witness_implies_pm_above_catalan";
}  // namespace check

inline theorem_report verify_main_theorem(const point_set& s, const witness_options& options = {}) {
    detail::require_even(s);
    theorem_report r;
    r.n = s.size();
    r.k = s.size() / 2;
    r.catalan_k = catalan(r.k);
    r.gnt = gnt_lower_bound(s);
    r.tag = classify(s);
    r.witness_found = build_witness(s, options).found();
    if (s.size() <= options.engine.count_cap) r.pm = count_matchings(s, options.engine);

    auto record = [&](std::string_view label, bool needs_pm, auto&& holds) {
        if (needs_pm && !r.pm) {
            r.skipped_checks.emplace_back(label);
        } else if (!holds()) {
            r.failed_checks.emplace_back(label);
        }
    };
    const bool exempt = r.tag != classification::generic;
    record(check::pm_at_least_catalan, true, [&] { return *r.pm >= r.catalan_k; });
    record(check::gnt_at_least_catalan, false, [&] { return r.gnt >= r.catalan_k; });
    record(check::gnt_at_most_pm, true, [&] { return r.gnt <= *r.pm; });
    record(check::equality_iff_exempt, true, [&] { return (*r.pm == r.catalan_k) == exempt; });
    record(check::witness_iff_generic, false, [&] { return r.witness_found == !exempt; });
    record(check::witness_implies_strict, true, [&] { return !r.witness_found || *r.pm > r.catalan_k; });
    r.consistent = r.failed_checks.empty();
    return r;
}

}  // namespace pmatch
