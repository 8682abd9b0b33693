/**
 * Z/2 cohomology of a complex with complete (k-1)-skeleton.
 *
 * Degree convention: incidence matrices are indexed by their row degree.
 * I_j has one row per j-face (complete skeleton) and one column per present
 * (j+1)-face; entry 1 iff the row face is contained in the column face. The
 * top reduced Betti number is
 *
 *     beta^{k-1} = C(n,k) - rank(I_{k-1} | present k-faces) - rank(I_{k-2}),
 *
 * where the lower matrix is always over the complete skeleton. For k = 1 the
 * lower matrix is the reduced one: I_{-1} is a single all-ones row (the
 * empty face is contained in every vertex), so beta^0 = #components - 1.
 *
 * rank(I_{k-2}) is computed at runtime and cached per (n, k); the closed
 * form C(n-1, k-1) is checked in tests as a derived invariant, never
 * assumed.
 */
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rcs/bitmatrix.hpp"
#include "rcs/combinatorics.hpp"
#include "rcs/complex.hpp"

namespace rcs {

/// A Z/2-valued function on the j-faces, packed by colex rank.
struct Cochain {
    int degree = 0;  // j: values indexed by j-face rank, length C(n, j+1)
    BitVec values;
};

struct BettiResult {
    std::uint64_t beta = 0;
    std::uint64_t rank_upper = 0;  // rank of I_{k-1} restricted to present k-faces
    std::uint64_t rank_lower = 0;  // rank of the complete-skeleton I_{k-2}
};

/// Incidence matrix I_j with the given present (j+1)-faces as columns
/// (ascending rank order). j = -1 gives the reduced single-row matrix.
inline BitMatrix incidence_matrix(int n, int j, std::span<const FaceRank> present) {
    if (n < 1 || j < -1 || j + 1 >= n) throw std::invalid_argument("incidence_matrix: bad (n, j)");
    const std::uint64_t nrows = binomial(n, j + 1);
    const std::uint64_t ncols_all = binomial(n, j + 2);
    BitMatrix m(nrows, present.size());
    BinomialTable bt(n, j + 2);
    const int col_size = j + 2;
    std::vector<Vertex> buf(static_cast<std::size_t>(col_size));
    std::vector<FaceRank> br(static_cast<std::size_t>(col_size));
    FaceRank prev = 0;
    for (std::size_t c = 0; c < present.size(); ++c) {
        const FaceRank r = present[c];
        if (r >= ncols_all) throw std::invalid_argument("incidence_matrix: column rank out of range");
        if (c > 0 && r <= prev) throw std::invalid_argument("incidence_matrix: columns must ascend");
        prev = r;
        face_unrank_into(r, col_size, n, buf, bt);
        boundary_ranks_into(buf, br, bt);
        for (FaceRank b : br) m.set(b, c);
    }
    return m;
}

/// Incidence matrix I_j over the complete skeleton (all columns).
inline BitMatrix incidence_matrix(int n, int j) {
    const std::uint64_t ncols = binomial(n, j + 2);
    std::vector<FaceRank> all(ncols);
    for (std::uint64_t c = 0; c < ncols; ++c) all[c] = c;
    return incidence_matrix(n, j, all);
}

/// rank of I_{k-2}(n, ALL) over GF(2), cached per (n, k). For k = 1 this is
/// the reduced all-ones row, rank 1.
inline std::uint64_t rank_complete_lower(int n, int k) {
    if (k < 1 || n <= k) throw std::invalid_argument("rank_complete_lower: need n > k >= 1");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::uint64_t> cache;
    {
        std::scoped_lock lock(mu);
        auto it = cache.find({n, k});
        if (it != cache.end()) return it->second;
    }
    const std::uint64_t r = incidence_matrix(n, k - 2).rank();
    std::scoped_lock lock(mu);
    cache.emplace(std::make_pair(n, k), r);
    return r;
}

/// beta^{k-1}(Y) by two rank computations. The column rank of the upper
/// matrix is accumulated with an incremental basis over the (k+1)-sparse
/// boundary columns, stopping early once it hits its ceiling
/// C(n,k) - rank_lower (the lower rows annihilate every column, so the
/// ceiling is exact and beta = 0 from that point on).
inline BettiResult betti_top(const SimplicialComplexK& y) {
    validate_complex(y);
    const std::uint64_t nlow = y.num_lower_faces();
    const std::uint64_t rank_lower = rank_complete_lower(y.n, y.k);
    const std::uint64_t ceiling = nlow - rank_lower;
    ColumnBasis basis(nlow);
    BinomialTable bt(y.n, y.k + 2);
    std::vector<Vertex> buf(static_cast<std::size_t>(y.k) + 1);
    std::vector<FaceRank> br(static_cast<std::size_t>(y.k) + 1);
    for (FaceRank r : y.kfaces) {
        if (basis.rank() == ceiling) break;
        face_unrank_into(r, y.k + 1, y.n, buf, bt);
        boundary_ranks_into(buf, br, bt);
        basis.insert_sparse(br);
    }
    const std::uint64_t rank_upper = basis.rank();
    return {nlow - rank_upper - rank_lower, rank_upper, rank_lower};
}

/// True iff f sums to zero over the boundary of every present k-face.
inline bool is_cocycle(const Cochain& f, const SimplicialComplexK& y) {
    validate_complex(y);
    if (f.degree != y.k - 1 || f.values.size() != y.num_lower_faces())
        throw std::invalid_argument("is_cocycle: cochain degree/length mismatch");
    BinomialTable bt(y.n, y.k + 1);
    std::vector<Vertex> buf(static_cast<std::size_t>(y.k) + 1);
    std::vector<FaceRank> br(static_cast<std::size_t>(y.k) + 1);
    for (FaceRank r : y.kfaces) {
        face_unrank_into(r, y.k + 1, y.n, buf, bt);
        boundary_ranks_into(buf, br, bt);
        bool parity = false;
        for (FaceRank b : br) parity ^= f.values.get(b);
        if (parity) return false;
    }
    return true;
}

/// True iff f is in the row space of the complete lower incidence matrix
/// I_{k-2}(n, ALL). For k = 2 this says the support of f is a cut of K_n.
inline bool is_coboundary(const Cochain& f, int n, int k) {
    if (k < 1 || n <= k) throw std::invalid_argument("is_coboundary: need n > k >= 1");
    if (f.degree != k - 1 || f.values.size() != binomial(n, k))
        throw std::invalid_argument("is_coboundary: cochain degree/length mismatch");
    return in_row_space(incidence_matrix(n, k - 2), f.values);
}

}  // namespace rcs
