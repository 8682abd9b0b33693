#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "rcs/cohomology.hpp"
#include "rcs/connectivity.hpp"
#include "rcs/process.hpp"
#include "rcs/rng.hpp"

using namespace rcs;

namespace {

std::uint64_t m3_by_recomputation(const GrowthOrder& g) {
    for (std::uint64_t m = 1; m <= g.order.size(); ++m)
        if (betti_top(complex_from_prefix(g, m)).beta == 0) return m;
    FAIL("full complex must have beta = 0");
    return 0;
}

}  // namespace

TEST_CASE("single possible face: all hitting times are 1") {
    GrowthOrder g{3, 2, {0}};
    const HittingTimes h = run_hitting_times(g);
    CHECK(h.m1 == 1);
    CHECK(h.m2 == 1);
    CHECK(h.m3 == 1);
}

TEST_CASE("hitting times are ordered") {
    for (int t = 0; t < 50; ++t) {
        SplitMix64 rng(trial_seed(1000, t));
        const auto g = sample_growth_order(6, 2, rng);
        const HittingTimes h = run_hitting_times(g);
        CHECK(h.m1 <= h.m2);
        CHECK(h.m2 <= h.m3);
        CHECK(h.m1 >= 1);
        CHECK(h.m3 <= g.order.size());
    }
}

TEST_CASE("streamed M3 equals the recomputation oracle (n=5, 100 seeds)") {
    for (int t = 0; t < 100; ++t) {
        SplitMix64 rng(trial_seed(2000, t));
        const auto g = sample_growth_order(5, 2, rng);
        CHECK(run_hitting_times(g).m3 == m3_by_recomputation(g));
    }
}

TEST_CASE("beta vanishes exactly at M3") {
    for (int t = 0; t < 20; ++t) {
        SplitMix64 rng(trial_seed(3000, t));
        const auto g = sample_growth_order(6, 2, rng);
        const HittingTimes h = run_hitting_times(g);
        CHECK(betti_top(complex_from_prefix(g, h.m3)).beta == 0);
        if (h.m3 > 1) CHECK(betti_top(complex_from_prefix(g, h.m3 - 1)).beta >= 1);
        // the marginal definitions of M1 and M2 hold as well
        CHECK(isolated_count(complex_from_prefix(g, h.m1)) == 0);
        if (h.m1 > 1) CHECK(isolated_count(complex_from_prefix(g, h.m1 - 1)) > 0);
        CHECK(is_hypergraph_connected(complex_from_prefix(g, h.m2)));
        if (h.m2 > 1) CHECK_FALSE(is_hypergraph_connected(complex_from_prefix(g, h.m2 - 1)));
    }
}

TEST_CASE("trace invariants along the process") {
    SplitMix64 rng(4000);
    const auto g = sample_growth_order(6, 2, rng);
    const std::uint64_t nlow = binomial(6, 2);
    const std::uint64_t target = nlow - rank_complete_lower(6, 2);
    std::uint64_t prev_m = 0, prev_comps = nlow, prev_rank = 0;
    const HittingTimes h =
        run_hitting_times(g, true,
                          [&](std::uint64_t m, std::uint64_t iso, std::uint64_t comps,
                              std::uint64_t rank) {
                              CHECK(m == prev_m + 1);
                              // a new k-face merges at most k+1 classes
                              CHECK(prev_comps - comps <= 2);
                              CHECK(comps <= prev_comps);
                              // rank increments are 0 or 1
                              CHECK(rank - prev_rank <= 1);
                              CHECK(rank >= prev_rank);
                              // degree sum = (k+1) m, so isolated count only decreases
                              CHECK(iso <= nlow);
                              prev_m = m;
                              prev_comps = comps;
                              prev_rank = rank;
                          });
    CHECK(prev_m == h.m3);  // early exit stops at M3
    CHECK(prev_rank == target);
}

TEST_CASE("degree sum equals (k+1) m along prefixes") {
    SplitMix64 rng(4100);
    const auto g = sample_growth_order(5, 2, rng);
    BinomialTable bt(5, 3);
    std::vector<Vertex> buf(3);
    std::vector<FaceRank> br(3);
    for (std::uint64_t m = 1; m <= 6; ++m) {
        const auto y = complex_from_prefix(g, m);
        std::uint64_t degree_sum = 0;
        std::vector<std::uint64_t> degree(binomial(5, 2), 0);
        for (FaceRank r : y.kfaces) {
            face_unrank_into(r, 3, 5, buf, bt);
            boundary_ranks_into(buf, br, bt);
            for (FaceRank b : br) ++degree[b], ++degree_sum;
        }
        CHECK(degree_sum == 3 * m);
    }
}

TEST_CASE("replaying the same order gives identical times") {
    SplitMix64 rng(5000);
    const auto g = sample_growth_order(7, 2, rng);
    const HittingTimes a = run_hitting_times(g);
    const HittingTimes b = run_hitting_times(g);
    CHECK(a.m1 == b.m1);
    CHECK(a.m2 == b.m2);
    CHECK(a.m3 == b.m3);
    // full run (no early exit) finds the same times
    const HittingTimes c = run_hitting_times(g, false);
    CHECK(a.m1 == c.m1);
    CHECK(a.m2 == c.m2);
    CHECK(a.m3 == c.m3);
}

TEST_CASE("k=1 degeneracy: M2 = M3 (connectivity time)") {
    for (int t = 0; t < 20; ++t) {
        SplitMix64 rng(trial_seed(6000, t));
        const auto g = sample_growth_order(6, 1, rng);
        const HittingTimes h = run_hitting_times(g);
        CHECK(h.m2 == h.m3);
        CHECK(h.m1 <= h.m2);
    }
}

TEST_CASE("malformed orders are rejected") {
    CHECK_THROWS_AS(run_hitting_times(GrowthOrder{5, 2, {0, 1, 2}}), std::invalid_argument);
    GrowthOrder dup{4, 2, {0, 1, 1, 3}};
    CHECK_THROWS_AS(run_hitting_times(dup), std::invalid_argument);
    GrowthOrder out{4, 2, {0, 1, 2, 4}};
    CHECK_THROWS_AS(run_hitting_times(out), std::invalid_argument);
}

TEST_CASE("coincidence_flags") {
    CHECK(coincidence_flags({5, 5, 5}).eq12);
    CHECK(coincidence_flags({5, 5, 5}).eq123);
    CHECK(coincidence_flags({5, 5, 7}).eq12);
    CHECK_FALSE(coincidence_flags({5, 5, 7}).eq123);
    CHECK_FALSE(coincidence_flags({4, 6, 6}).eq12);
    CHECK_FALSE(coincidence_flags({4, 6, 6}).eq123);
}
