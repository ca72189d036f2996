#pragma once

// Constructive search for a matching with the piercing property.
//
// Sets with exactly one interior point Q are handled by relabelling the hull
// around Q and pairing consecutive hull vertices; sets with several interior
// points by splitting along the line through a hull vertex and an interior
// point. Every constructed matching is validated before it is returned.

#include <algorithm>
#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmatch/error.hpp"
#include "pmatch/geometry.hpp"
#include "pmatch/matching.hpp"

namespace pmatch {

enum class witness_case { even_k, odd_k_delta2, odd_k_all_halving, k3_brute_force, many_interior };

constexpr std::string_view to_string(witness_case c) noexcept {
    switch (c) {
        case witness_case::even_k: return "even_k";
        case witness_case::odd_k_delta2: return "odd_k_delta2";
        case witness_case::odd_k_all_halving: return "odd_k_all_halving";
        case witness_case::k3_brute_force: return "k3_brute_force";
        case witness_case::many_interior: return "many_interior";
    }
    return "unknown";
}

enum class no_witness_reason { convex_position, exceptional_six };

constexpr std::string_view to_string(no_witness_reason r) noexcept {
    return r == no_witness_reason::convex_position ? "convex_position" : "exceptional_six";
}

/// Intermediate objects of the construction. Optional fields are set only by
/// the case that uses them.
struct witness_trace {
    witness_case case_tag = witness_case::even_k;
    std::optional<std::size_t> q;
    /// Hull vertex with |delta| = 2 (point index).
    std::optional<std::size_t> j0;
    std::optional<std::ptrdiff_t> delta;
    std::optional<std::size_t> r;
    std::optional<std::size_t> r_prime;
    std::optional<std::vector<std::size_t>> s1;
    std::optional<std::vector<std::size_t>> s2;
    /// Hull edge (A_j, A_j+1) crossed by the ray from A_1 through Q.
    std::optional<segment> exit_edge;
    /// Hull vertices in the relabelled order A_1, A_2, ...
    std::vector<std::size_t> labels;
    std::optional<piercing_pair> pierce;
    /// The construction did not validate and the brute-force oracle was used.
    bool oracle_fallback = false;
};

struct witness_result {
    std::optional<matching> witness;
    std::optional<no_witness_reason> reason;
    /// Present whenever a case of the construction was reached.
    std::optional<witness_trace> trace;

    bool found() const noexcept { return witness.has_value(); }
};

struct witness_options {
    engine_options engine;
    /// Warnings about oracle fallbacks go here; nullptr silences them.
    std::ostream* log = &std::cerr;
};

namespace detail {

inline void warn(const witness_options& options, const std::string& message) {
    if (options.log) *options.log << "warning: " << message << '\n';
}

// Validates the candidate and its certificate. On failure falls back to the
// oracle when the set is small enough, otherwise reports an inconsistency.
inline witness_result finish_witness(const point_set& s, std::vector<segment> pairs, witness_trace trace,
                                     const witness_options& options, std::string_view what) {
    matching m = canonical_matching(std::move(pairs));
    bool ok = is_valid_matching(m, s);
    if (ok && trace.pierce) {
        const auto& [ab, cd] = *trace.pierce;
        const hull_labeling h = convex_hull(s);
        ok = h.on_hull(ab.first) && pierces(s[ab.first], s[ab.second], s[cd.first], s[cd.second]) &&
             std::binary_search(m.pairs.begin(), m.pairs.end(), make_segment(ab.first, ab.second)) &&
             std::binary_search(m.pairs.begin(), m.pairs.end(), make_segment(cd.first, cd.second));
    } else {
        ok = false;
    }
    if (ok) return witness_result{std::move(m), std::nullopt, std::move(trace)};

    if (s.size() > options.engine.enumerate_cap)
        throw error(errc::internal_inconsistency,
                    std::string(what) + " construction failed validation (n=" + std::to_string(s.size()) + ")");
    warn(options, std::string(what) + " construction failed validation; using brute-force oracle");
    trace.oracle_fallback = true;
    auto oracle = exists_piercing_matching(s, options.engine);
    if (!oracle)
        throw error(errc::internal_inconsistency,
                    std::string(what) + " construction failed and the oracle found no piercing matching");
    trace.pierce = find_piercing_pair(*oracle, s);
    return witness_result{std::move(*oracle), std::nullopt, std::move(trace)};
}

// Hull cycle rotated to start at `first`, walked clockwise or counter-clockwise.
inline std::vector<std::size_t> relabel(const std::vector<std::size_t>& hull, std::size_t first, bool clockwise) {
    const std::size_t m = hull.size();
    const auto start = static_cast<std::size_t>(std::find(hull.begin(), hull.end(), first) - hull.begin());
    std::vector<std::size_t> out(m);
    for (std::size_t t = 0; t < m; ++t) out[t] = clockwise ? hull[(start + t) % m] : hull[(start + m - t) % m];
    return out;
}

// labels[i] is A_{i+1}.
inline std::size_t label(const std::vector<std::size_t>& labels, std::size_t one_based) {
    return labels.at(one_based - 1);
}

}  // namespace detail

inline witness_result build_witness_one_interior(const point_set& s, const witness_options& options = {}) {
    detail::require_even(s);
    if (s.size() < 4) throw error(errc::precondition_violated, "one-interior construction needs n >= 4");
    const hull_labeling h = convex_hull(s);
    if (h.interior.size() != 1)
        throw error(errc::precondition_violated,
                    "expected exactly one interior point, found " + std::to_string(h.interior.size()));

    const std::size_t n = s.size();
    const std::size_t k = n / 2;
    const std::size_t q = h.interior.front();

    witness_trace trace;
    trace.q = q;

    // A_1 Q plus consecutive hull pairs A_2A_3, ..., A_{n-2}A_{n-1}.
    auto consecutive = [&](const std::vector<std::size_t>& labels) {
        std::vector<segment> pairs{make_segment(detail::label(labels, 1), q)};
        for (std::size_t i = 2; i + 1 <= n - 1; i += 2)
            pairs.push_back(make_segment(detail::label(labels, i), detail::label(labels, i + 1)));
        return pairs;
    };

    if (k % 2 == 0) {
        trace.case_tag = witness_case::even_k;
        trace.labels = detail::relabel(h.hull, halving_vertex(s, q), true);
        const auto& a = trace.labels;
        trace.pierce = piercing_pair{segment{detail::label(a, 1), q},
                                     segment{detail::label(a, k), detail::label(a, k + 1)}};
        auto pairs = consecutive(a);
        return detail::finish_witness(s, std::move(pairs), std::move(trace), options, "even-k");
    }

    const std::size_t half = k - 1;
    bool all_halving = true;
    std::optional<std::size_t> j0;
    for (std::size_t v : h.hull) {
        const side_count c = side_counts(s, q, v);
        if (c != side_count{half, half}) all_halving = false;
        const std::ptrdiff_t d = c.delta();
        if (!j0 && (d == 2 || d == -2)) {
            j0 = v;
            trace.delta = d;
        }
    }

    if (all_halving) {
        trace.labels = detail::relabel(h.hull, h.hull.front(), true);
        if (k == 3) {
            trace.case_tag = witness_case::k3_brute_force;
            auto oracle = exists_piercing_matching(s, options.engine);
            if (!oracle)
                return witness_result{std::nullopt, no_witness_reason::exceptional_six, std::move(trace)};
            trace.pierce = find_piercing_pair(*oracle, s);
            return detail::finish_witness(s, std::move(oracle->pairs), std::move(trace), options, "k=3");
        }
        trace.case_tag = witness_case::odd_k_all_halving;
        const auto& a = trace.labels;
        auto at = [&](std::size_t i) { return detail::label(a, i); };
        std::vector<segment> pairs{make_segment(at(1), q), make_segment(at(k - 1), at(k + 2)),
                                   make_segment(at(k), at(k + 1))};
        for (std::size_t i = 2; i <= k - 3; i += 2) pairs.push_back(make_segment(at(i), at(i + 1)));
        for (std::size_t i = k + 3; i <= n - 2; i += 2) pairs.push_back(make_segment(at(i), at(i + 1)));
        trace.pierce = piercing_pair{segment{at(1), q}, make_segment(at(k - 1), at(k + 2))};
        return detail::finish_witness(s, std::move(pairs), std::move(trace), options, "odd-k all-halving");
    }

    trace.case_tag = witness_case::odd_k_delta2;
    if (!j0) {
        detail::warn(options, "no hull vertex with |delta| = 2 although not all lines halve");
        trace.oracle_fallback = true;
        if (n > options.engine.enumerate_cap)
            throw error(errc::internal_inconsistency, "no |delta| = 2 vertex and n exceeds the oracle cap");
        auto oracle = exists_piercing_matching(s, options.engine);
        if (!oracle) throw error(errc::internal_inconsistency, "no |delta| = 2 vertex and no piercing matching");
        trace.pierce = find_piercing_pair(*oracle, s);
        return witness_result{std::move(*oracle), std::nullopt, std::move(trace)};
    }
    trace.j0 = *j0;

    // Walk the hull so that A_2..A_{k-1} (k-2 points) come first.
    const std::vector<std::size_t> cw = detail::relabel(h.hull, *j0, true);
    std::size_t leading = 0;
    const orientation first_side = orient(s[q], s[*j0], s[cw[1]]);
    for (std::size_t i = 1; i < cw.size() && orient(s[q], s[*j0], s[cw[i]]) == first_side; ++i) ++leading;
    trace.labels = leading == k - 2 ? cw : detail::relabel(h.hull, *j0, false);
    const auto& a = trace.labels;
    trace.pierce = piercing_pair{segment{detail::label(a, 1), q},
                                 segment{detail::label(a, k - 1), detail::label(a, k)}};
    auto pairs = consecutive(a);
    return detail::finish_witness(s, std::move(pairs), std::move(trace), options, "odd-k delta=2");
}

inline witness_result build_witness_many_interior(const point_set& s, const witness_options& options = {}) {
    detail::require_even(s);
    const hull_labeling h = convex_hull(s);
    if (h.interior.size() < 2)
        throw error(errc::precondition_violated,
                    "expected at least two interior points, found " + std::to_string(h.interior.size()));

    const std::size_t q = h.interior[0];
    const std::size_t r = h.interior[1];
    const std::size_t m = h.hull.size();

    // Hull edge (a, b) crossed by the ray starting at `from` in direction
    // from -> through, beyond `through`. The edge endpoints lie strictly on
    // opposite sides of the line, and moving along the ray approaches the
    // edge's line from the interior side.
    auto exit_edge = [&](std::size_t from, std::size_t through) -> std::optional<std::size_t> {
        const point o = s[from];
        const point t = s[through];
        for (std::size_t e = 0; e < m; ++e) {
            const point a = s[h.hull[e]];
            const point b = s[h.hull[(e + 1) % m]];
            const orientation oa = orient(o, t, a);
            const orientation ob = orient(o, t, b);
            if (oa == orientation::collinear || ob == orientation::collinear || oa == ob) continue;
            const __int128 ex = b.x - a.x, ey = b.y - a.y;
            const __int128 dx = t.x - o.x, dy = t.y - o.y;
            if (ex * dy - ey * dx > 0) return e;
        }
        return std::nullopt;
    };

    const auto qr_edge = exit_edge(q, r);
    if (!qr_edge) throw error(errc::internal_inconsistency, "ray Q->R does not leave the hull");

    witness_trace trace;
    trace.case_tag = witness_case::many_interior;
    trace.q = q;
    trace.r = r;
    trace.labels = detail::relabel(h.hull, h.hull[*qr_edge], true);
    const auto& a = trace.labels;
    const std::size_t a1 = a[0];
    const std::size_t a2 = a[1];

    // S_1 holds the side of line A_1Q containing A_2.
    const orientation s1_side = orient(s[a1], s[q], s[a2]);
    std::vector<std::size_t> s1, s2;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == a1 || i == q) continue;
        (orient(s[a1], s[q], s[i]) == s1_side ? s1 : s2).push_back(i);
    }
    trace.s1 = s1;
    trace.s2 = s2;

    std::vector<segment> pairs{make_segment(a1, q)};
    auto complete = [&](std::vector<std::size_t> subset, std::span<const segment> fixed) {
        auto sub = first_matching(s, std::move(subset), fixed);
        if (!sub) return false;
        for (const auto& p : *sub) pairs.push_back(p);
        return true;
    };

    bool built = true;
    if (s1.size() % 2 == 1) {
        const auto edge = exit_edge(a1, q);
        if (!edge) throw error(errc::internal_inconsistency, "ray A1->Q does not leave the hull");
        const std::size_t aj = h.hull[*edge];
        const std::size_t aj1 = h.hull[(*edge + 1) % m];
        trace.exit_edge = segment{aj, aj1};
        pairs.push_back(make_segment(aj, aj1));
        auto without = [](std::vector<std::size_t> v, std::size_t x) {
            v.erase(std::remove(v.begin(), v.end(), x), v.end());
            return v;
        };
        built = complete(without(s1, aj), {}) && complete(without(s2, aj1), {});
        trace.pierce = piercing_pair{segment{a1, q}, make_segment(aj, aj1)};
    } else {
        // R' minimises the angle at A_2 towards A_1 among points inside A_1A_2Q.
        const orientation toward_q = orient(s[a2], s[a1], s[q]);
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i == a1 || i == a2 || i == q) continue;
            if (!point_in_triangle(s[i], s[a1], s[a2], s[q])) continue;
            if (!best || orient(s[a2], s[i], s[*best]) == toward_q) best = i;
        }
        if (!best) throw error(errc::internal_inconsistency, "triangle A1A2Q contains no point");
        trace.r_prime = *best;
        const segment seed = make_segment(a2, *best);
        built = complete(s2, {}) && complete(s1, std::span<const segment>(&seed, 1));
        trace.pierce = piercing_pair{segment{a2, *best}, make_segment(a1, q)};
    }
    if (!built) pairs.clear();
    return detail::finish_witness(s, std::move(pairs), std::move(trace), options, "many-interior");
}

inline witness_result build_witness(const point_set& s, const witness_options& options = {}) {
    detail::require_even(s);
    if (s.size() < 2) throw error(errc::invalid_argument, "build_witness needs at least 2 points");
    if (s.size() == 2) return witness_result{std::nullopt, no_witness_reason::convex_position, std::nullopt};
    const hull_labeling h = convex_hull(s);
    if (h.interior.empty()) return witness_result{std::nullopt, no_witness_reason::convex_position, std::nullopt};
    if (h.interior.size() == 1) return build_witness_one_interior(s, options);
    return build_witness_many_interior(s, options);
}

}  // namespace pmatch
