#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <queue>
#include <vector>

#include "rcs/cohomology.hpp"
#include "rcs/connectivity.hpp"
#include "rcs/rng.hpp"

using namespace rcs;

namespace {

// Independent oracle: BFS over the "two (k-1)-faces lie in a common present
// k-face" adjacency.
ComponentProfile components_by_bfs(const SimplicialComplexK& y) {
    const std::uint64_t nlow = y.num_lower_faces();
    std::vector<std::vector<std::uint32_t>> adj(nlow);
    std::vector<std::uint32_t> degree(nlow, 0);
    BinomialTable bt(y.n, y.k + 1);
    std::vector<Vertex> buf(y.k + 1);
    std::vector<FaceRank> br(y.k + 1);
    for (FaceRank r : y.kfaces) {
        face_unrank_into(r, y.k + 1, y.n, buf, bt);
        boundary_ranks_into(buf, br, bt);
        for (FaceRank b : br) ++degree[b];
        for (std::size_t i = 0; i < br.size(); ++i)
            for (std::size_t j = i + 1; j < br.size(); ++j) {
                adj[br[i]].push_back(static_cast<std::uint32_t>(br[j]));
                adj[br[j]].push_back(static_cast<std::uint32_t>(br[i]));
            }
    }
    ComponentProfile p;
    std::vector<bool> seen(nlow, false);
    for (std::uint64_t s = 0; s < nlow; ++s) {
        if (seen[s]) continue;
        std::uint64_t size = 0;
        std::queue<std::uint32_t> q;
        q.push(static_cast<std::uint32_t>(s));
        seen[s] = true;
        while (!q.empty()) {
            const std::uint32_t u = q.front();
            q.pop();
            ++size;
            for (std::uint32_t v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
        }
        p.sizes.push_back(size);
    }
    std::sort(p.sizes.begin(), p.sizes.end(), std::greater<>());
    p.num_components = p.sizes.size();
    p.largest_size = p.sizes.empty() ? 0 : p.sizes.front();
    for (std::uint64_t f = 0; f < nlow; ++f)
        if (degree[f] == 0) ++p.isolated_count;
    return p;
}

}  // namespace

TEST_CASE("UnionFind basics") {
    UnionFind uf(5);
    CHECK(uf.components() == 5);
    CHECK(uf.unite(0, 1));
    CHECK_FALSE(uf.unite(1, 0));
    CHECK(uf.unite(2, 3));
    CHECK(uf.components() == 3);
    CHECK(uf.find(0) == uf.find(1));
    CHECK(uf.find(0) != uf.find(2));
    CHECK(uf.component_size(1) == 2);
}

TEST_CASE("isolated_count examples") {
    CHECK(isolated_count(SimplicialComplexK{4, 2, {}}) == binomial(4, 2));
    CHECK(isolated_count(make_complex(4, 2, {0, 1, 2, 3})) == 0);
    // only the triangle {0,1,2}: edges {0,3},{1,3},{2,3} stay isolated
    CHECK(isolated_count(make_complex(4, 2, {face_rank(Face{0, 1, 2}, 4)})) == 3);
}

TEST_CASE("components examples") {
    const auto empty = components(SimplicialComplexK{4, 2, {}});
    CHECK(empty.num_components == 6);
    CHECK(empty.isolated_count == 6);
    CHECK(empty.largest_size == 1);
    CHECK(empty.sizes == std::vector<std::uint64_t>(6, 1));

    const auto one = components(make_complex(4, 2, {face_rank(Face{0, 1, 2}, 4)}));
    CHECK(one.num_components == 4);
    CHECK(one.sizes == std::vector<std::uint64_t>{3, 1, 1, 1});
    CHECK(one.isolated_count == 3);

    const auto full = components(make_complex(4, 2, {0, 1, 2, 3}));
    CHECK(full.num_components == 1);
    CHECK(full.largest_size == 6);
}

TEST_CASE("is_hypergraph_connected") {
    CHECK(is_hypergraph_connected(make_complex(4, 2, {0, 1, 2, 3})));
    CHECK_FALSE(is_hypergraph_connected(SimplicialComplexK{4, 2, {}}));
    // any complex with an isolated face and more than one (k-1)-face is
    // disconnected
    CHECK_FALSE(is_hypergraph_connected(make_complex(4, 2, {face_rank(Face{0, 1, 2}, 4)})));
}

TEST_CASE("components agrees with the BFS oracle") {
    for (int k = 2; k <= 3; ++k) {
        for (int n = k + 1; n <= 6; ++n) {
            for (int t = 0; t < 25; ++t) {
                SplitMix64 rng(trial_seed(40 + 10 * k + n, t));
                const auto y = sample_ynp(n, k, rng.next_double(), rng);
                const auto got = components(y);
                const auto expect = components_by_bfs(y);
                CHECK(got.num_components == expect.num_components);
                CHECK(got.isolated_count == expect.isolated_count);
                CHECK(got.largest_size == expect.largest_size);
                CHECK(got.sizes == expect.sizes);
            }
        }
    }
}

TEST_CASE("profile invariants") {
    for (int t = 0; t < 30; ++t) {
        SplitMix64 rng(trial_seed(60, t));
        const auto y = sample_ynp(6, 2, rng.next_double(), rng);
        const auto p = components(y);
        std::uint64_t total = 0;
        for (auto s : p.sizes) total += s;
        CHECK(total == y.num_lower_faces());
        CHECK(p.num_components == p.sizes.size());
        if (p.num_components == 1) CHECK(p.isolated_count == 0);
        // size-1 components are exactly the isolated faces (k >= 1)
        CHECK(static_cast<std::uint64_t>(
                  std::count(p.sizes.begin(), p.sizes.end(), std::uint64_t{1})) ==
              p.isolated_count);
    }
}

TEST_CASE("vanishing cohomology implies hypergraph connectivity") {
    for (int k = 2; k <= 3; ++k) {
        for (int n = k + 1; n <= 7; ++n) {
            for (int t = 0; t < 15; ++t) {
                SplitMix64 rng(trial_seed(70 + 10 * k + n, t));
                const auto y = sample_ynp(n, k, 0.3 + 0.7 * rng.next_double(), rng);
                if (betti_top(y).beta == 0) CHECK(is_hypergraph_connected(y));
            }
        }
    }
}

TEST_CASE("insertion order does not change the profile") {
    SplitMix64 rng(80);
    const auto y = sample_ynp(6, 2, 0.4, rng);
    const auto base = components(y);
    for (int it = 0; it < 10; ++it) {
        auto shuffled = y.kfaces;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.next_below(i)]);
        // rebuild the union-find by hand in shuffled order
        UnionFind uf(y.num_lower_faces());
        BinomialTable bt(6, 3);
        std::vector<Vertex> buf(3);
        std::vector<FaceRank> br(3);
        for (FaceRank r : shuffled) {
            face_unrank_into(r, 3, 6, buf, bt);
            boundary_ranks_into(buf, br, bt);
            for (std::size_t i = 1; i < br.size(); ++i)
                uf.unite(static_cast<std::uint32_t>(br[0]), static_cast<std::uint32_t>(br[i]));
        }
        CHECK(uf.components() == base.num_components);
    }
}
