/**
 * The growth process Y(n, M) and its three hitting times:
 *
 *   M1 = first m with no isolated (k-1)-face,
 *   M2 = first m at which the complex is hypergraph connected,
 *   M3 = first m with beta^{k-1} = 0.
 *
 * One pass over the birth order maintains per-face degree counters (M1),
 * a union-find over the (k-1)-faces (M2), and an incremental column basis
 * of boundary columns whose rank hits C(n,k) - rank_lower exactly at M3.
 * Always M1 <= M2 <= M3. For k = 1 the reduced convention makes M3 the
 * connectivity time, so M2 = M3 identically.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "rcs/bitmatrix.hpp"
#include "rcs/cohomology.hpp"
#include "rcs/complex.hpp"
#include "rcs/connectivity.hpp"

namespace rcs {

struct HittingTimes {
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    std::uint64_t m3 = 0;
};

struct CoincidenceFlags {
    bool eq12 = false;   // M1 == M2
    bool eq123 = false;  // M1 == M2 == M3
};

inline CoincidenceFlags coincidence_flags(const HittingTimes& h) {
    return {h.m1 == h.m2, h.m1 == h.m2 && h.m2 == h.m3};
}

/// Called after each insertion with (m, #isolated, #components, rank).
using ProcessTrace = std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t)>;

inline HittingTimes run_hitting_times(const GrowthOrder& order, bool early_exit = true,
                                      const ProcessTrace& trace = {}) {
    validate_growth_order(order);
    const int n = order.n, k = order.k;
    const std::uint64_t nlow = binomial(n, k);
    const std::uint64_t rank_lower = rank_complete_lower(n, k);
    const std::uint64_t target_rank = nlow - rank_lower;

    std::vector<std::uint32_t> degree(nlow, 0);
    std::uint64_t zero_degree = nlow;
    UnionFind uf(nlow);
    ColumnBasis basis(nlow);
    BinomialTable bt(n, k + 2);
    std::vector<Vertex> buf(static_cast<std::size_t>(k) + 1);
    std::vector<FaceRank> br(static_cast<std::size_t>(k) + 1);

    HittingTimes h;
    for (std::uint64_t m = 1; m <= order.order.size(); ++m) {
        face_unrank_into(order.order[m - 1], k + 1, n, buf, bt);
        boundary_ranks_into(buf, br, bt);
        for (FaceRank b : br)
            if (degree[b]++ == 0) --zero_degree;
        for (std::size_t i = 1; i < br.size(); ++i)
            uf.unite(static_cast<std::uint32_t>(br[0]), static_cast<std::uint32_t>(br[i]));
        if (h.m3 == 0) basis.insert_sparse(br);  // rank is frozen at its ceiling after M3

        if (h.m1 == 0 && zero_degree == 0) h.m1 = m;
        if (h.m2 == 0 && uf.components() == 1) h.m2 = m;
        if (h.m3 == 0 && basis.rank() == target_rank) h.m3 = m;
        if (trace) trace(m, zero_degree, uf.components(), basis.rank());
        if (early_exit && h.m3 != 0) break;
    }
    if (h.m1 == 0 || h.m2 == 0 || h.m3 == 0)
        throw std::logic_error("run_hitting_times: process ended before all hitting times");
    return h;
}

}  // namespace rcs
