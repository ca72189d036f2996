#pragma once

#include <cstdint>

#include "pmatch/generate.hpp"
#include "pmatch/geometry.hpp"

namespace fixtures {

/// Unit square scaled by 10 with two interior points.
inline pmatch::point_set g1() {
    return pmatch::point_set({{0, 0}, {0, 10}, {10, 10}, {10, 0}, {4, 5}, {6, 5}});
}

inline pmatch::point_set generated(pmatch::generator_kind kind, std::size_t n, std::uint64_t seed) {
    pmatch::generator_spec spec;
    spec.kind = kind;
    spec.n = n;
    spec.seed = seed;
    return pmatch::generate(spec);
}

inline pmatch::point_set convex(std::size_t n, std::uint64_t seed = 1) {
    return generated(pmatch::generator_kind::convex, n, seed);
}

}  // namespace fixtures
