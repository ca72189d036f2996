#pragma once

// Seeded point-set generators. All randomness comes from std::mt19937_64,
// whose output sequence is fixed by the standard; integer and real draws are
// derived from it here rather than through std::*_distribution so generated
// sets are identical across standard library implementations.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pmatch/error.hpp"
#include "pmatch/geometry.hpp"

namespace pmatch {

enum class generator_kind { convex, random_disk, one_interior, many_interior, exceptional };

constexpr std::string_view to_string(generator_kind k) noexcept {
    switch (k) {
        case generator_kind::convex: return "convex";
        case generator_kind::random_disk: return "random";
        case generator_kind::one_interior: return "one-interior";
        case generator_kind::many_interior: return "many-interior";
        case generator_kind::exceptional: return "exceptional";
    }
    return "unknown";
}

inline std::optional<generator_kind> parse_generator_kind(std::string_view name) {
    for (auto k : {generator_kind::convex, generator_kind::random_disk, generator_kind::one_interior,
                   generator_kind::many_interior, generator_kind::exceptional})
        if (name == to_string(k)) return k;
    return std::nullopt;
}

/// Smallest n each kind can produce.
constexpr std::size_t minimum_size(generator_kind k) noexcept {
    switch (k) {
        case generator_kind::one_interior: return 4;
        case generator_kind::many_interior: return 6;
        case generator_kind::exceptional: return 6;
        default: return 2;
    }
}

struct generator_spec {
    generator_kind kind = generator_kind::random_disk;
    std::size_t n = 6;
    std::uint64_t seed = 0;
    std::int64_t radius = 1'000'000;
    /// Whole-set or per-point rejections allowed before giving up.
    std::size_t attempt_budget = 100'000;
};

/// Regular pentagon rounded to integers, plus its centre.
inline point_set exceptional_six() {
    return point_set({{0, 0}, {0, 100}, {95, 31}, {59, -81}, {-59, -81}, {-95, 31}});
}

namespace detail {

class sampler {
public:
    explicit sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(rng_());
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t v;
        do {
            v = rng_();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// Uniform real in [0, 1).
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    point on_circle(std::int64_t radius) {
        const double angle = 2.0 * std::numbers::pi * unit();
        const double r = static_cast<double>(radius);
        return {std::llround(r * std::cos(angle)), std::llround(r * std::sin(angle))};
    }

    point in_disk(std::int64_t radius) {
        for (;;) {
            const point p{integer(-radius, radius), integer(-radius, radius)};
            if (static_cast<__int128>(p.x) * p.x + static_cast<__int128>(p.y) * p.y <=
                static_cast<__int128>(radius) * radius)
                return p;
        }
    }

private:
    std::mt19937_64 rng_;
};

// True if p can join pts without duplicating a point or creating a collinear
// triple.
inline bool fits_general_position(const std::vector<point>& pts, point p) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] == p) return false;
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (orient(pts[i], pts[j], p) == orientation::collinear) return false;
    }
    return true;
}

inline std::optional<std::vector<point>> convex_polygon(sampler& rng, std::size_t n, std::int64_t radius,
                                                        std::size_t& budget) {
    while (budget > 0) {
        --budget;
        std::vector<point> pts;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            const point p = rng.on_circle(radius);
            ok = fits_general_position(pts, p);
            pts.push_back(p);
        }
        if (!ok) continue;
        if (n < 3 || is_convex_position(point_set(pts))) return pts;
    }
    return std::nullopt;
}

inline std::optional<std::vector<point>> disk_points(sampler& rng, std::size_t n, std::int64_t radius,
                                                     std::size_t& budget) {
    std::vector<point> pts;
    while (pts.size() < n) {
        if (budget == 0) return std::nullopt;
        --budget;
        const point p = rng.in_disk(radius);
        if (fits_general_position(pts, p)) pts.push_back(p);
    }
    return pts;
}

}  // namespace detail

/// Deterministic in the spec. Throws GenerationExhausted when the attempt
/// budget runs out and InvalidArgument for unsatisfiable specs.
inline point_set generate(const generator_spec& spec) {
    if (spec.kind == generator_kind::exceptional) {
        point_set s = exceptional_six();
        const std::size_t q = 0;
        for (std::size_t v = 1; v < s.size(); ++v)
            if (side_counts(s, q, v) != side_count{2, 2})
                throw error(errc::internal_inconsistency, "exceptional set lost its halving property");
        return s;
    }
    if (spec.n < 2 || spec.n % 2 != 0)
        throw error(errc::invalid_argument, "n must be even and at least 2, got " + std::to_string(spec.n));
    if (spec.n < minimum_size(spec.kind))
        throw error(errc::invalid_argument, std::string(to_string(spec.kind)) + " needs n >= " +
                                                std::to_string(minimum_size(spec.kind)));
    if (spec.radius < 1 || spec.radius > coordinate_limit)
        throw error(errc::invalid_argument, "radius must lie in [1, 2^30]");

    detail::sampler rng(spec.seed);
    std::size_t budget = spec.attempt_budget;
    auto exhausted = [&]() -> point_set {
        throw error(errc::generation_exhausted, std::string(to_string(spec.kind)) + " n=" + std::to_string(spec.n) +
                                                    " seed=" + std::to_string(spec.seed));
    };

    switch (spec.kind) {
        case generator_kind::convex: {
            auto pts = detail::convex_polygon(rng, spec.n, spec.radius, budget);
            return pts ? point_set(std::move(*pts)) : exhausted();
        }
        case generator_kind::random_disk: {
            auto pts = detail::disk_points(rng, spec.n, spec.radius, budget);
            return pts ? point_set(std::move(*pts)) : exhausted();
        }
        case generator_kind::one_interior: {
            // A thin polygon rarely catches a disk point, so redraw it after a
            // bounded number of misses.
            while (budget > 0) {
                auto pts = detail::convex_polygon(rng, spec.n - 1, spec.radius, budget);
                if (!pts) break;
                const auto slot = rng.integer(0, static_cast<std::int64_t>(spec.n) - 1);
                for (int tries = 0; tries < 64 && budget > 0; ++tries) {
                    --budget;
                    const point p = rng.in_disk(spec.radius);
                    if (!detail::fits_general_position(*pts, p)) continue;
                    std::vector<point> candidate = *pts;
                    candidate.insert(candidate.begin() + slot, p);
                    point_set s(std::move(candidate));
                    if (convex_hull(s).interior.size() == 1) return s;
                }
            }
            return exhausted();
        }
        case generator_kind::many_interior: {
            while (budget > 0) {
                auto pts = detail::disk_points(rng, spec.n, spec.radius, budget);
                if (!pts) break;
                point_set s(std::move(*pts));
                if (convex_hull(s).interior.size() >= 2) return s;
            }
            return exhausted();
        }
        case generator_kind::exceptional: break;
    }
    return exhausted();
}

}  // namespace pmatch
