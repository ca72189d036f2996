#pragma once

// Exact planar predicates over bounded integer coordinates.
//
// Every predicate reduces to the sign of a 2x2 determinant. With |x|,|y| <= 2^30
// the coordinate differences fit in 32 bits and the determinant fits in 64 bits
// plus sign; we evaluate it in __int128 so that no input within the bound can
// overflow.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmatch/error.hpp"

namespace pmatch {

inline constexpr std::int64_t coordinate_limit = std::int64_t{1} << 30;

struct point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const point&, const point&) = default;
};

enum class orientation { clockwise, counter_clockwise, collinear };

namespace detail {

inline int determinant_sign(point a, point b, point c) noexcept {
    const __int128 bx = b.x - a.x;
    const __int128 by = b.y - a.y;
    const __int128 cx = c.x - a.x;
    const __int128 cy = c.y - a.y;
    const __int128 det = bx * cy - by * cx;
    return (det > 0) - (det < 0);
}

inline bool in_range(point p) noexcept {
    return p.x >= -coordinate_limit && p.x <= coordinate_limit && p.y >= -coordinate_limit &&
           p.y <= coordinate_limit;
}

inline std::string describe(point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace detail

/// Orientation of the triple (a, b, c); a positive determinant of (b-a, c-a)
/// is counter-clockwise.
inline orientation orient(point a, point b, point c) noexcept {
    const int s = detail::determinant_sign(a, b, c);
    if (s > 0) return orientation::counter_clockwise;
    if (s < 0) return orientation::clockwise;
    return orientation::collinear;
}

/// True iff the open segments p1p2 and q1q2 share a point. Requires four
/// distinct points with no three collinear; unspecified for shared endpoints.
inline bool segments_cross(point p1, point p2, point q1, point q2) noexcept {
    return orient(p1, p2, q1) != orient(p1, p2, q2) && orient(q1, q2, p1) != orient(q1, q2, p2);
}

/// Segment ab pierces segment cd: they do not cross, but the line through a
/// and b meets the open segment cd. Directional.
inline bool pierces(point a, point b, point c, point d) noexcept {
    return orient(a, b, c) != orient(a, b, d) && !segments_cross(a, b, c, d);
}

/// Strict containment; boundary points are outside.
inline bool point_in_triangle(point p, point a, point b, point c) noexcept {
    const orientation t = orient(a, b, c);
    return orient(a, b, p) == t && orient(b, c, p) == t && orient(c, a, p) == t;
}

struct validation_options {
    /// Force the full O(n^3) collinearity scan regardless of n.
    bool strict = false;
    /// Sets up to this size always get the full scan.
    std::size_t full_scan_limit = 64;
    /// Number of random triples checked above the full-scan limit.
    std::size_t sample_count = 200000;
};

/// Ordered set of distinct points in general position.
class point_set {
public:
    point_set() = default;

    explicit point_set(std::vector<point> points, const validation_options& options = {})
        : points_(std::move(points)) {
        validate(options);
    }

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const point> points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    friend bool operator==(const point_set&, const point_set&) = default;

private:
    void validate(const validation_options& options) const {
        const std::size_t n = points_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (!detail::in_range(points_[i])) {
                throw error(errc::coordinate_out_of_range,
                            "point " + std::to_string(i) + " " + detail::describe(points_[i]) +
                                " exceeds |coordinate| <= 2^30");
            }
        }

        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return points_[a] < points_[b];
        });
        for (std::size_t i = 1; i < n; ++i) {
            if (points_[order[i - 1]] == points_[order[i]]) {
                const auto [a, b] = std::minmax(order[i - 1], order[i]);
                throw error(errc::duplicate_point, "points " + std::to_string(a) + " and " +
                                                       std::to_string(b) + " coincide at " +
                                                       detail::describe(points_[a]));
            }
        }

        if (n < 3) return;
        if (options.strict || n <= options.full_scan_limit) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = j + 1; k < n; ++k) check_triple(i, j, k);
            return;
        }
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < options.sample_count; ++s) {
            std::size_t t[3] = {pick(rng), pick(rng), pick(rng)};
            if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
            std::sort(std::begin(t), std::end(t));
            check_triple(t[0], t[1], t[2]);
        }
    }

    void check_triple(std::size_t i, std::size_t j, std::size_t k) const {
        if (orient(points_[i], points_[j], points_[k]) == orientation::collinear) {
            throw error(errc::not_general_position, "points (" + std::to_string(i) + "," +
                                                        std::to_string(j) + "," +
                                                        std::to_string(k) + ") are collinear");
        }
    }

    std::vector<point> points_;
};

/// Hull vertices in clockwise order starting from the lexicographically
/// smallest point; interior indices ascending.
struct hull_labeling {
    std::vector<std::size_t> hull;
    std::vector<std::size_t> interior;

    bool on_hull(std::size_t i) const {
        return std::find(hull.begin(), hull.end(), i) != hull.end();
    }
    /// Position of index i in the hull cycle, if it is a hull vertex.
    std::optional<std::size_t> label_of(std::size_t i) const {
        const auto it = std::find(hull.begin(), hull.end(), i);
        if (it == hull.end()) return std::nullopt;
        return static_cast<std::size_t>(it - hull.begin());
    }
};

inline hull_labeling convex_hull(const point_set& s) {
    const std::size_t n = s.size();
    if (n < 3) throw error(errc::degenerate_input, "convex hull needs at least 3 points");

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });

    // Monotone chain. The upper chain walked left to right followed by the
    // lower chain walked right to left is the clockwise cycle from the
    // lexicographic minimum.
    std::vector<std::size_t> upper;
    for (std::size_t i : order) {
        while (upper.size() >= 2 &&
               orient(s[upper[upper.size() - 2]], s[upper.back()], s[i]) != orientation::clockwise)
            upper.pop_back();
        upper.push_back(i);
    }
    std::vector<std::size_t> lower;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        while (lower.size() >= 2 &&
               orient(s[lower[lower.size() - 2]], s[lower.back()], s[*it]) != orientation::clockwise)
            lower.pop_back();
        lower.push_back(*it);
    }

    hull_labeling out;
    out.hull = upper;
    out.hull.insert(out.hull.end(), lower.begin() + 1, lower.end() - 1);

    std::vector<bool> is_hull(n, false);
    for (std::size_t h : out.hull) is_hull[h] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_hull[i]) out.interior.push_back(i);
    return out;
}

inline bool is_convex_position(const point_set& s) {
    return convex_hull(s).interior.empty();
}

/// The other points sorted clockwise around hull vertex a1: the first is the
/// clockwise hull successor of a1, the last its predecessor.
inline std::vector<std::size_t> polar_order(const point_set& s, std::size_t a1) {
    if (a1 >= s.size()) throw error(errc::invalid_argument, "index out of range");
    if (s.size() >= 3 && !convex_hull(s).on_hull(a1))
        throw error(errc::not_on_hull, "point " + std::to_string(a1) + " is interior");

    std::vector<std::size_t> rest;
    rest.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != a1) rest.push_back(i);
    const point apex = s[a1];
    // All other points lie in an open half-plane through a hull vertex, so
    // "v is clockwise of u" is a strict total order.
    std::sort(rest.begin(), rest.end(), [&](std::size_t u, std::size_t v) {
        return orient(apex, s[u], s[v]) == orientation::clockwise;
    });
    return rest;
}

struct side_count {
    std::size_t left = 0;
    std::size_t right = 0;

    /// right - left
    std::ptrdiff_t delta() const noexcept {
        return static_cast<std::ptrdiff_t>(right) - static_cast<std::ptrdiff_t>(left);
    }
    friend bool operator==(const side_count&, const side_count&) = default;
};

/// Points of S \ {p, q} strictly left / right of the directed line p -> q.
inline side_count side_counts(const point_set& s, std::size_t p, std::size_t q) {
    if (p == q) throw error(errc::invalid_argument, "side_counts needs two distinct points");
    side_count c;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == p || i == q) continue;
        switch (orient(s[p], s[q], s[i])) {
            case orientation::counter_clockwise: ++c.left; break;
            case orientation::clockwise: ++c.right; break;
            case orientation::collinear: break;
        }
    }
    return c;
}

/// Smallest hull label j such that the line through the unique interior
/// point q and hull vertex j leaves k-1 points on each side. Returns the
/// point index of that hull vertex.
inline std::size_t halving_vertex(const point_set& s, std::size_t q) {
    if (s.size() % 2 != 0) throw error(errc::odd_size, "halving_vertex needs an even point count");
    const hull_labeling h = convex_hull(s);
    if (h.interior.size() != 1 || h.interior.front() != q)
        throw error(errc::precondition_violated,
                    "point " + std::to_string(q) + " is not the unique interior point");
    const std::size_t half = s.size() / 2 - 1;
    for (std::size_t v : h.hull) {
        if (side_counts(s, q, v) == side_count{half, half}) return v;
    }
    throw error(errc::not_found, "no halving hull vertex through the interior point");
}

}  // namespace pmatch
