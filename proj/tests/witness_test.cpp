#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pmatch/generate.hpp"
#include "pmatch/witness.hpp"

using namespace pmatch;

namespace {

witness_options quiet() {
    witness_options o;
    o.log = nullptr;
    return o;
}

segment canonical(const segment& s) { return make_segment(s.first, s.second); }

// Soundness plus trace coherence.
void expect_sound(const point_set& s, const witness_result& w) {
    ASSERT_TRUE(w.found());
    ASSERT_TRUE(w.trace);
    EXPECT_TRUE(is_valid_matching(*w.witness, s));
    EXPECT_TRUE(has_piercing_property(*w.witness, s));
    ASSERT_TRUE(w.trace->pierce);
    const auto& [ab, cd] = *w.trace->pierce;
    EXPECT_TRUE(convex_hull(s).on_hull(ab.first));
    EXPECT_TRUE(pierces(s[ab.first], s[ab.second], s[cd.first], s[cd.second]));
    EXPECT_TRUE(oracle::pierces(s[ab.first], s[ab.second], s[cd.first], s[cd.second]));
    const auto& pairs = w.witness->pairs;
    EXPECT_NE(std::find(pairs.begin(), pairs.end(), make_segment(ab.first, ab.second)), pairs.end());
    EXPECT_NE(std::find(pairs.begin(), pairs.end(), make_segment(cd.first, cd.second)), pairs.end());
}

}  // namespace

TEST(BuildWitness, ExceptionalSetHasNone) {
    const auto w = build_witness(exceptional_six(), quiet());
    EXPECT_FALSE(w.found());
    EXPECT_EQ(w.reason, no_witness_reason::exceptional_six);
    ASSERT_TRUE(w.trace);
    EXPECT_EQ(w.trace->case_tag, witness_case::k3_brute_force);
}

TEST(BuildWitness, ConvexSetsHaveNone) {
    const auto w = build_witness(fixtures::convex(8), quiet());
    EXPECT_FALSE(w.found());
    EXPECT_EQ(w.reason, no_witness_reason::convex_position);
    const auto two = build_witness(point_set({{0, 0}, {1, 0}}), quiet());
    EXPECT_EQ(two.reason, no_witness_reason::convex_position);
}

TEST(BuildWitness, OddSize) {
    try {
        build_witness(point_set({{0, 0}, {1, 0}, {0, 1}}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::odd_size);
    }
}

TEST(BuildWitness, G1UsesManyInteriorConstruction) {
    const point_set s = fixtures::g1();
    const auto w = build_witness(s, quiet());
    expect_sound(s, w);
    EXPECT_EQ(w.trace->case_tag, witness_case::many_interior);
    EXPECT_FALSE(w.trace->oracle_fallback);
    EXPECT_EQ(w.trace->q, 4u);
    EXPECT_EQ(w.trace->r, 5u);
    EXPECT_TRUE(w.trace->s1 && w.trace->s2);
}

TEST(OneInterior, TriangleWithInteriorPointIsEvenK) {
    const point_set s({{0, 0}, {10, 0}, {3, 2}, {4, 9}});
    const auto w = build_witness_one_interior(s, quiet());
    expect_sound(s, w);
    EXPECT_EQ(w.trace->case_tag, witness_case::even_k);
    const auto& a = w.trace->labels;
    // {A1 Q, A2 A3}; A1 Q pierces A2 A3.
    EXPECT_EQ(w.witness->pairs, canonical_matching({{a[0], 2}, {a[1], a[2]}}).pairs);
    EXPECT_EQ(canonical(w.trace->pierce->pierced), make_segment(a[1], a[2]));
    EXPECT_EQ(oracle::plane_matchings({s.begin(), s.end()}).size(), 3u);
}

TEST(OneInterior, EightPointsEvenK) {
    // Seven points near a circle and one off-centre interior point.
    const point_set s({{1000, 0}, {623, 782}, {-223, 975}, {-901, 434}, {-901, -434}, {-223, -975},
                       {623, -782}, {150, 90}});
    const auto w = build_witness_one_interior(s, quiet());
    expect_sound(s, w);
    EXPECT_EQ(w.trace->case_tag, witness_case::even_k);
    const auto& a = w.trace->labels;
    EXPECT_EQ(w.trace->pierce->piercer, (segment{a[0], 7}));
    EXPECT_EQ(canonical(w.trace->pierce->pierced), make_segment(a[3], a[4]));  // A4 A5
    const std::size_t q = 7;
    EXPECT_EQ(side_counts(s, q, a[0]), (side_count{3, 3}));
}

TEST(OneInterior, OddKDelta2RecordsTraceFields) {
    int seen = 0;
    for (std::uint64_t seed = 0; seen < 10 && seed < 200; ++seed) {
        const point_set s = fixtures::generated(generator_kind::one_interior, 6 + 4 * (seed % 2), seed);
        const auto w = build_witness(s, quiet());
        if (!w.trace || w.trace->case_tag != witness_case::odd_k_delta2) continue;
        ++seen;
        expect_sound(s, w);
        EXPECT_FALSE(w.trace->oracle_fallback);
        ASSERT_TRUE(w.trace->j0 && w.trace->delta && w.trace->q);
        EXPECT_EQ(std::abs(*w.trace->delta), 2);
        const std::size_t k = s.size() / 2;
        const auto& a = w.trace->labels;
        EXPECT_EQ(a[0], *w.trace->j0);
        // A_2..A_{k-1} on one side of line Q A_1, A_k..A_{n-1} on the other.
        const orientation small = orient(s[*w.trace->q], s[a[0]], s[a[1]]);
        for (std::size_t i = 1; i < a.size(); ++i)
            EXPECT_EQ(orient(s[*w.trace->q], s[a[0]], s[a[i]]) == small, i + 1 <= k - 1);
        EXPECT_FALSE(w.trace->r || w.trace->r_prime || w.trace->s1 || w.trace->exit_edge);
    }
    EXPECT_EQ(seen, 10);
}

TEST(OneInterior, AllHalvingTenPointsUsesExplicitMatching) {
    // Regular 9-gon with its centre: every line through the centre and a
    // vertex halves the set.
    std::vector<point> pts{{0, 0}};
    const double r = 100000;
    for (int i = 0; i < 9; ++i) {
        const double t = 2 * 3.14159265358979323846 * i / 9 + 0.1;
        pts.push_back({std::llround(r * std::cos(t)), std::llround(r * std::sin(t))});
    }
    const point_set s(pts);
    const auto w = build_witness_one_interior(s, quiet());
    expect_sound(s, w);
    EXPECT_EQ(w.trace->case_tag, witness_case::odd_k_all_halving);
    EXPECT_FALSE(w.trace->oracle_fallback);
    const auto& a = w.trace->labels;
    auto A = [&](std::size_t i) { return a[i - 1]; };
    // k = 5: {A1 Q, A4 A7, A5 A6, A2 A3, A8 A9}.
    EXPECT_EQ(w.witness->pairs,
              canonical_matching({{A(1), 0}, {A(4), A(7)}, {A(5), A(6)}, {A(2), A(3)}, {A(8), A(9)}}).pairs);
    EXPECT_EQ(canonical(w.trace->pierce->pierced), make_segment(A(4), A(7)));
}

TEST(OneInterior, PreconditionViolated) {
    try {
        build_witness_one_interior(fixtures::g1());
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::precondition_violated);
    }
}

TEST(ManyInterior, PreconditionViolated) {
    try {
        build_witness_many_interior(exceptional_six());
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::precondition_violated);
    }
}

TEST(ManyInterior, TriangleInsideTriangle) {
    const point_set s({{0, 0}, {100, 0}, {50, 90}, {45, 30}, {55, 31}, {49, 45}});
    ASSERT_EQ(convex_hull(s).interior.size(), 3u);
    const auto w = build_witness_many_interior(s, quiet());
    expect_sound(s, w);
    EXPECT_GT(oracle::plane_matchings({s.begin(), s.end()}).size(), 5u);
}

TEST(ManyInterior, BothParityBranchesAreReachedAndSound) {
    int odd = 0, even = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 6 + 2 * (seed % 4);
        const point_set s = fixtures::generated(generator_kind::many_interior, n, seed);
        const auto w = build_witness_many_interior(s, quiet());
        expect_sound(s, w);
        EXPECT_FALSE(w.trace->oracle_fallback);
        const auto& t = *w.trace;
        ASSERT_TRUE(t.s1 && t.s2 && t.q && t.r);
        EXPECT_EQ(t.s1->size() + t.s2->size(), n - 2);
        // R lies in triangle A1 A2 Q.
        EXPECT_TRUE(point_in_triangle(s[*t.r], s[t.labels[0]], s[t.labels[1]], s[*t.q]));
        if (t.s1->size() % 2 == 1) {
            ++odd;
            ASSERT_TRUE(t.exit_edge);
            EXPECT_FALSE(t.r_prime);
            EXPECT_EQ(canonical(t.pierce->pierced), make_segment(t.exit_edge->first, t.exit_edge->second));
        } else {
            ++even;
            ASSERT_TRUE(t.r_prime);
            EXPECT_FALSE(t.exit_edge);
            // No point of S inside A1 A2 R' is closer in angle to A1 than R'.
            const point a1 = s[t.labels[0]], a2 = s[t.labels[1]], q = s[*t.q];
            for (std::size_t i = 0; i < n; ++i)
                if (i != *t.r_prime && point_in_triangle(s[i], a1, a2, q)) {
                    EXPECT_EQ(orient(a2, s[*t.r_prime], s[i]), orient(a2, a1, q));
                }
            EXPECT_EQ(t.pierce->piercer, (segment{t.labels[1], *t.r_prime}));
        }
    }
    EXPECT_GT(odd, 20);
    EXPECT_GT(even, 20);
}

TEST(BuildWitness, EquivalentToBruteForceOracle) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 4 + 2 * (t % 5);  // up to 12
        const point_set s(oracle::random_points(rng, n, 60));
        const auto w = build_witness(s, quiet());
        EXPECT_EQ(w.found(), exists_piercing_matching(s).has_value());
        if (w.found()) expect_sound(s, w);
    }
}

TEST(BuildWitness, LargeSetsBeyondOracleCap) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (auto kind : {generator_kind::one_interior, generator_kind::many_interior}) {
            const point_set s = fixtures::generated(kind, 40, seed);
            const auto w = build_witness(s, quiet());
            ASSERT_TRUE(w.found());
            EXPECT_TRUE(has_piercing_property(*w.witness, s));
            EXPECT_FALSE(w.trace->oracle_fallback);
        }
    }
}

TEST(BuildWitness, DeterministicAndQuiet) {
    std::ostringstream log;
    witness_options o;
    o.log = &log;
    const point_set s = fixtures::generated(generator_kind::many_interior, 10, 5);
    const auto a = build_witness(s, o);
    const auto b = build_witness(s, o);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_TRUE(log.str().empty());
}
