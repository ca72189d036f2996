#pragma once

// Non-crossing perfect matchings: enumeration, exact counting, Catalan
// numbers, the recursive separated-matching lower bound and the piercing
// property of a matching.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmatch/error.hpp"
#include "pmatch/geometry.hpp"

namespace pmatch {

using big_int = boost::multiprecision::cpp_int;

/// Index pair (i, j) with i < j.
using segment = std::pair<std::size_t, std::size_t>;

inline segment make_segment(std::size_t a, std::size_t b) { return a < b ? segment{a, b} : segment{b, a}; }

struct matching {
    /// Sorted lexicographically, each pair with first < second.
    std::vector<segment> pairs;

    std::size_t size() const noexcept { return pairs.size(); }
    friend auto operator<=>(const matching&, const matching&) = default;
};

inline matching canonical_matching(std::vector<segment> pairs) {
    for (auto& p : pairs) p = make_segment(p.first, p.second);
    std::sort(pairs.begin(), pairs.end());
    return matching{std::move(pairs)};
}

struct engine_options {
    std::size_t enumerate_cap = 20;
    std::size_t count_cap = 24;
    /// count_matchings returns C_k directly for sets in convex position.
    bool convex_fast_path = true;
};

/// Throws InvalidMatching unless m is a perfect, pairwise non-crossing
/// matching of s in canonical form.
inline void validate_matching(const matching& m, const point_set& s) {
    const std::size_t n = s.size();
    if (m.pairs.size() * 2 != n)
        throw error(errc::invalid_matching, "matching has " + std::to_string(m.pairs.size()) +
                                                " pairs for " + std::to_string(n) + " points");
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < m.pairs.size(); ++i) {
        const auto [a, b] = m.pairs[i];
        if (a >= b || b >= n)
            throw error(errc::invalid_matching,
                        "bad pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (seen[a] || seen[b])
            throw error(errc::invalid_matching, "index matched twice in pair (" + std::to_string(a) +
                                                    "," + std::to_string(b) + ")");
        seen[a] = seen[b] = true;
        if (i > 0 && !(m.pairs[i - 1] < m.pairs[i]))
            throw error(errc::invalid_matching, "pairs are not sorted");
    }
    for (std::size_t i = 0; i < m.pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < m.pairs.size(); ++j) {
            const auto [a, b] = m.pairs[i];
            const auto [c, d] = m.pairs[j];
            if (segments_cross(s[a], s[b], s[c], s[d]))
                throw error(errc::invalid_matching,
                            "segments (" + std::to_string(a) + "," + std::to_string(b) + ") and (" +
                                std::to_string(c) + "," + std::to_string(d) + ") cross");
        }
    }
}

inline bool is_valid_matching(const matching& m, const point_set& s) {
    try {
        validate_matching(m, s);
        return true;
    } catch (const error&) {
        return false;
    }
}

namespace detail {

// Backtracking over a subset of the points. Always extends the first
// unmatched vertex (in the given vertex order) to each later unmatched vertex
// whose segment crosses none of the chosen ones; every matching of the subset
// is visited exactly once.
class matcher {
public:
    matcher(const point_set& s, std::vector<std::size_t> vertices, std::span<const segment> fixed = {})
        : s_(s), vertices_(std::move(vertices)), m_(vertices_.size()), matched_(m_, false) {
        if (m_ <= table_limit) build_table();
        for (const auto& f : fixed) fixed_.push_back(f);
        fixed_ok_ = init_fixed();
    }

    /// Calls visit(chosen) for every completion; chosen holds global index
    /// pairs (fixed segments first). Stops early when visit returns false.
    /// Returns false if stopped early.
    template <class Visit>
    bool run(Visit&& visit) {
        if (!fixed_ok_) return true;
        if ((m_ - 2 * fixed_.size()) % 2 != 0) return true;
        chosen_.clear();
        for (const auto& f : fixed_) chosen_.push_back(f);
        return extend(visit, 0);
    }

    /// Leaf count without materializing matchings.
    big_int count() {
        big_int total = 0;
        std::uint64_t local = 0;
        run([&](const std::vector<segment>&) {
            if (local == std::numeric_limits<std::uint64_t>::max()) {
                total += local;
                local = 0;
            }
            ++local;
            return true;
        });
        total += local;
        return total;
    }

private:
    static constexpr std::size_t table_limit = 32;

    void build_table() {
        crosses_.assign(m_ * m_ * m_ * m_, 0);
        for (std::size_t a = 0; a < m_; ++a)
            for (std::size_t b = a + 1; b < m_; ++b)
                for (std::size_t c = 0; c < m_; ++c)
                    for (std::size_t d = c + 1; d < m_; ++d) {
                        if (c == a || c == b || d == a || d == b) continue;
                        crosses_[key(a, b, c, d)] = segments_cross(at(a), at(b), at(c), at(d));
                    }
    }

    bool crosses(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        if (!crosses_.empty()) return crosses_[key(a, b, c, d)];
        return segments_cross(at(a), at(b), at(c), at(d));
    }

    const point& at(std::size_t local) const { return s_[vertices_[local]]; }
    std::size_t key(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        return ((a * m_ + b) * m_ + c) * m_ + d;
    }

    bool init_fixed() {
        for (const auto& f : fixed_) {
            const auto a = local_of(f.first);
            const auto b = local_of(f.second);
            if (!a || !b || matched_[*a] || matched_[*b] || *a == *b) return false;
            matched_[*a] = matched_[*b] = true;
            const auto [lo, hi] = std::minmax(*a, *b);
            for (const auto& [c, d] : local_chosen_)
                if (crosses(lo, hi, c, d)) return false;
            local_chosen_.emplace_back(lo, hi);
        }
        return true;
    }

    std::optional<std::size_t> local_of(std::size_t global) const {
        const auto it = std::find(vertices_.begin(), vertices_.end(), global);
        if (it == vertices_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    template <class Visit>
    bool extend(Visit& visit, std::size_t from) {
        std::size_t u = from;
        while (u < m_ && matched_[u]) ++u;
        if (u == m_) return visit(static_cast<const std::vector<segment>&>(chosen_));
        matched_[u] = true;
        for (std::size_t v = u + 1; v < m_; ++v) {
            if (matched_[v]) continue;
            bool ok = true;
            for (const auto& [c, d] : local_chosen_) {
                if (crosses(u, v, c, d)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            matched_[v] = true;
            local_chosen_.emplace_back(u, v);
            chosen_.push_back(make_segment(vertices_[u], vertices_[v]));
            const bool go_on = extend(visit, u + 1);
            chosen_.pop_back();
            local_chosen_.pop_back();
            matched_[v] = false;
            if (!go_on) {
                matched_[u] = false;
                return false;
            }
        }
        matched_[u] = false;
        return true;
    }

    const point_set& s_;
    std::vector<std::size_t> vertices_;
    std::size_t m_;
    std::vector<bool> matched_;
    std::vector<std::uint8_t> crosses_;
    std::vector<segment> fixed_;
    bool fixed_ok_ = true;
    std::vector<segment> local_chosen_;
    std::vector<segment> chosen_;
};

inline std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

inline void require_even(const point_set& s) {
    if (s.size() % 2 != 0)
        throw error(errc::odd_size, "point set has odd size " + std::to_string(s.size()));
}

}  // namespace detail

/// First matching of the given subset found by backtracking in
/// lexicographic coordinate order, containing every segment in `fixed`.
/// Returns pairs in canonical order, or nothing if no such matching exists.
inline std::optional<std::vector<segment>> first_matching(const point_set& s,
                                                          std::vector<std::size_t> subset,
                                                          std::span<const segment> fixed = {}) {
    std::sort(subset.begin(), subset.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
    detail::matcher m(s, std::move(subset), fixed);
    std::optional<std::vector<segment>> found;
    m.run([&](const std::vector<segment>& chosen) {
        found = chosen;
        return false;
    });
    if (found) std::sort(found->begin(), found->end());
    return found;
}

/// Calls visit(const matching&) for every non-crossing perfect matching of s
/// in lexicographic order; stops when visit returns false.
template <class Visit>
void for_each_matching(const point_set& s, Visit&& visit) {
    detail::require_even(s);
    detail::matcher m(s, detail::all_indices(s.size()));
    matching current;
    m.run([&](const std::vector<segment>& chosen) {
        current.pairs = chosen;
        return visit(static_cast<const matching&>(current));
    });
}

inline std::vector<matching> enumerate_matchings(const point_set& s, const engine_options& options = {}) {
    detail::require_even(s);
    if (s.size() < 2) throw error(errc::invalid_argument, "enumeration needs at least 2 points");
    if (s.size() > options.enumerate_cap)
        throw error(errc::size_limit, "n=" + std::to_string(s.size()) + " exceeds enumeration cap " +
                                          std::to_string(options.enumerate_cap));
    std::vector<matching> out;
    for_each_matching(s, [&](const matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

/// Table C_0..C_max built from C_k = sum_{i<k} C_i C_{k-1-i}.
class catalan_table {
public:
    explicit catalan_table(std::size_t max_k) { extend(max_k); }

    const big_int& operator[](std::size_t k) const { return values_.at(k); }
    std::size_t max_k() const noexcept { return values_.size() - 1; }
    std::span<const big_int> values() const noexcept { return values_; }

    void extend(std::size_t max_k) {
        if (values_.empty()) values_.push_back(1);
        while (values_.size() <= max_k) {
            const std::size_t k = values_.size();
            big_int c = 0;
            for (std::size_t i = 0; i < k; ++i) c += values_[i] * values_[k - 1 - i];
            values_.push_back(std::move(c));
        }
    }

private:
    std::vector<big_int> values_;
};

inline big_int catalan(std::size_t k) {
    static std::mutex guard;
    static catalan_table table(16);
    std::lock_guard lock(guard);
    table.extend(k);
    return table[k];
}

inline big_int count_matchings(const point_set& s, const engine_options& options = {}) {
    detail::require_even(s);
    if (s.size() > options.count_cap)
        throw error(errc::size_limit, "n=" + std::to_string(s.size()) + " exceeds count cap " +
                                          std::to_string(options.count_cap));
    if (s.empty()) return 1;
    if (options.convex_fast_path && (s.size() == 2 || is_convex_position(s))) return catalan(s.size() / 2);
    detail::matcher m(s, detail::all_indices(s.size()));
    return m.count();
}

namespace detail {

class separated_counter {
public:
    explicit separated_counter(const point_set& s) : s_(s) {}

    big_int count(const std::vector<std::size_t>& subset) {
        if (subset.size() <= 2) return 1;
        std::string key(s_.size(), '\0');
        for (std::size_t i : subset) key[i] = '\1';
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // The lexicographically smallest point is always a hull vertex.
        const std::size_t apex = *std::min_element(
            subset.begin(), subset.end(), [&](std::size_t a, std::size_t b) { return s_[a] < s_[b]; });
        std::vector<std::size_t> rest;
        for (std::size_t i : subset)
            if (i != apex) rest.push_back(i);
        std::sort(rest.begin(), rest.end(), [&](std::size_t u, std::size_t v) {
            return orient(s_[apex], s_[u], s_[v]) == orientation::clockwise;
        });

        big_int total = 0;
        for (std::size_t i = 0; 2 * i < rest.size(); ++i) {
            const std::size_t partner = rest[2 * i];
            std::vector<std::size_t> left, right;
            for (std::size_t p : rest) {
                if (p == partner) continue;
                (orient(s_[apex], s_[partner], s_[p]) == orientation::counter_clockwise ? left : right)
                    .push_back(p);
            }
            total += count(left) * count(right);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    const point_set& s_;
    std::unordered_map<std::string, big_int> memo_;
};

}  // namespace detail

/// Number of matchings generated by the recursive line-split argument:
/// match the lexicographically smallest point A1 to every even-position
/// neighbour in clockwise polar order and recurse on both open half-planes.
/// Satisfies C_{n/2} <= result <= pm(S).
inline big_int gnt_lower_bound(const point_set& s) {
    detail::require_even(s);
    detail::separated_counter counter(s);
    return counter.count(detail::all_indices(s.size()));
}

/// Ordered pair of segments (AB, CD) where AB pierces CD; AB.first is a hull
/// vertex.
struct piercing_pair {
    segment piercer;
    segment pierced;
    friend bool operator==(const piercing_pair&, const piercing_pair&) = default;
};

/// First (AB, CD) in matching order with a hull endpoint on AB and AB
/// piercing CD. The returned piercer lists its hull endpoint first.
inline std::optional<piercing_pair> find_piercing_pair(const matching& m, const point_set& s) {
    validate_matching(m, s);
    if (m.pairs.size() < 2) return std::nullopt;
    const hull_labeling h = convex_hull(s);
    for (const auto& [a, b] : m.pairs) {
        const bool a_hull = h.on_hull(a);
        const bool b_hull = h.on_hull(b);
        if (!a_hull && !b_hull) continue;
        for (const auto& [c, d] : m.pairs) {
            if (c == a && d == b) continue;
            if (pierces(s[a], s[b], s[c], s[d])) {
                return piercing_pair{a_hull ? segment{a, b} : segment{b, a}, segment{c, d}};
            }
        }
    }
    return std::nullopt;
}

inline bool has_piercing_property(const matching& m, const point_set& s) {
    return find_piercing_pair(m, s).has_value();
}

/// Lexicographically first matching with the piercing property (brute force).
inline std::optional<matching> exists_piercing_matching(const point_set& s, const engine_options& options = {}) {
    detail::require_even(s);
    if (s.size() > options.enumerate_cap)
        throw error(errc::size_limit, "n=" + std::to_string(s.size()) + " exceeds enumeration cap " +
                                          std::to_string(options.enumerate_cap));
    if (s.size() < 4) return std::nullopt;
    const hull_labeling h = convex_hull(s);
    std::optional<matching> found;
    for_each_matching(s, [&](const matching& m) {
        for (const auto& [a, b] : m.pairs) {
            if (!h.on_hull(a) && !h.on_hull(b)) continue;
            for (const auto& [c, d] : m.pairs) {
                if (c == a && d == b) continue;
                if (pierces(s[a], s[b], s[c], s[d])) {
                    found = m;
                    return false;
                }
            }
        }
        return true;
    });
    return found;
}

}  // namespace pmatch
