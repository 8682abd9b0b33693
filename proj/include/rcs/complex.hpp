/**
 * Random k-dimensional complexes with complete (k-1)-skeleton.
 *
 * A complex stores only its k-faces, as sorted colex ranks; the complete
 * lower skeleton is implicit. Vertices are 0-based. Sampling covers the
 * Bernoulli model Y(n,p) and the growth process (a uniform permutation of
 * all possible k-faces; the prefix of length M is distributed as Y(n,M)).
 *
 * All types are immutable after construction; generators take an explicit
 * RNG handle.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "rcs/combinatorics.hpp"
#include "rcs/rng.hpp"

namespace rcs {

struct SimplicialComplexK {
    int n = 0;                     // vertex count
    int k = 1;                     // top dimension (>= 1)
    std::vector<FaceRank> kfaces;  // present k-faces, ascending rank

    std::uint64_t num_possible_kfaces() const { return binomial(n, k + 1); }
    /// Number of (k-1)-faces; the complete lower skeleton is implicit.
    std::uint64_t num_lower_faces() const { return binomial(n, k); }
};

inline void validate_complex(const SimplicialComplexK& y) {
    if (y.k < 1) throw std::invalid_argument("complex: k must be >= 1");
    if (y.n <= y.k) throw std::invalid_argument("complex: need n > k");
    const std::uint64_t total = y.num_possible_kfaces();
    FaceRank prev = 0;
    bool first = true;
    for (FaceRank r : y.kfaces) {
        if (r >= total) throw std::invalid_argument("complex: face rank out of range");
        if (!first && r <= prev) throw std::invalid_argument("complex: face ranks not strictly increasing");
        prev = r;
        first = false;
    }
}

inline SimplicialComplexK make_complex(int n, int k, std::vector<FaceRank> kfaces) {
    std::sort(kfaces.begin(), kfaces.end());
    SimplicialComplexK y{n, k, std::move(kfaces)};
    validate_complex(y);
    return y;
}

/// Bernoulli complex: each of the C(n, k+1) k-faces present independently
/// with probability p.
inline SimplicialComplexK sample_ynp(int n, int k, double p, SplitMix64& rng) {
    if (k < 1 || n <= k) throw std::invalid_argument("sample_ynp: need n > k >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_ynp: p outside [0, 1]");
    const std::uint64_t total = binomial(n, k + 1);
    SimplicialComplexK y{n, k, {}};
    for (std::uint64_t r = 0; r < total; ++r)
        if (rng.next_double() < p) y.kfaces.push_back(r);
    return y;
}

/// Birth order of the growth process: a uniformly random permutation of all
/// C(n, k+1) k-face ranks (Fisher-Yates).
struct GrowthOrder {
    int n = 0;
    int k = 1;
    std::vector<FaceRank> order;
};

inline GrowthOrder sample_growth_order(int n, int k, SplitMix64& rng) {
    if (k < 1 || n <= k) throw std::invalid_argument("sample_growth_order: need n > k >= 1");
    const std::uint64_t total = binomial(n, k + 1);
    GrowthOrder g{n, k, std::vector<FaceRank>(total)};
    std::iota(g.order.begin(), g.order.end(), FaceRank{0});
    for (std::uint64_t i = total; i > 1; --i)
        std::swap(g.order[i - 1], g.order[rng.next_below(i)]);
    return g;
}

inline void validate_growth_order(const GrowthOrder& g) {
    if (g.k < 1 || g.n <= g.k) throw std::invalid_argument("growth order: need n > k >= 1");
    const std::uint64_t total = binomial(g.n, g.k + 1);
    if (g.order.size() != total) throw std::invalid_argument("growth order: wrong length");
    std::vector<bool> seen(total, false);
    for (FaceRank r : g.order) {
        if (r >= total || seen[r]) throw std::invalid_argument("growth order: not a permutation");
        seen[r] = true;
    }
}

/// The complex Y(n, m): the first m faces of the growth order.
inline SimplicialComplexK complex_from_prefix(const GrowthOrder& g, std::uint64_t m) {
    if (m > g.order.size()) throw std::invalid_argument("complex_from_prefix: m out of range");
    std::vector<FaceRank> faces(g.order.begin(), g.order.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(faces.begin(), faces.end());
    return {g.n, g.k, std::move(faces)};
}

/// Link of a vertex: lk(v) = { sigma - v : sigma present, v in sigma }, a
/// (k-1)-complex on n-1 vertices. Remaining vertices are relabeled by the
/// order-preserving map [0,n) \ {v} -> [0, n-1).
inline SimplicialComplexK link(const SimplicialComplexK& y, Vertex v) {
    validate_complex(y);
    if (v < 0 || v >= y.n) throw std::invalid_argument("link: vertex out of range");
    if (y.k < 2) throw std::invalid_argument("link: requires k >= 2");
    BinomialTable bt(y.n, y.k + 1);
    std::vector<Vertex> buf(static_cast<std::size_t>(y.k) + 1);
    std::vector<Vertex> sub(static_cast<std::size_t>(y.k));
    SimplicialComplexK lk{y.n - 1, y.k - 1, {}};
    for (FaceRank r : y.kfaces) {
        face_unrank_into(r, y.k + 1, y.n, buf, bt);
        if (std::find(buf.begin(), buf.end(), v) == buf.end()) continue;
        std::size_t j = 0;
        for (Vertex w : buf)
            if (w != v) sub[j++] = (w > v) ? w - 1 : w;
        lk.kfaces.push_back(face_rank(sub, y.n - 1));
    }
    std::sort(lk.kfaces.begin(), lk.kfaces.end());
    return lk;
}

}  // namespace rcs
