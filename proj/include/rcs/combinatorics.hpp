/**
 * Face combinatorics: binomial coefficients and the colexicographic
 * ranking/unranking bijection between j-faces (sorted vertex lists) and
 * dense indices in [0, C(n, j+1)).
 *
 * The colex rank of a face {v_0 < v_1 < ... < v_j} is sum_i C(v_i, i+1).
 * Colex is chosen so that growing the vertex count n does not renumber
 * faces of smaller support.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcs {

using Vertex = int;
using FaceRank = std::uint64_t;

/// A face is a strictly increasing list of vertices in [0, n).
using Face = std::vector<Vertex>;

/// C(n, r) computed exactly in 64 bits; throws std::overflow_error if the
/// intermediate product would not fit.
inline std::uint64_t binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    std::uint64_t result = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        std::uint64_t tmp;
        if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(n - r + i), &tmp))
            throw std::overflow_error("binomial: value exceeds 64 bits");
        result = tmp / static_cast<std::uint64_t>(i);
    }
    return result;
}

/// Pascal-triangle lookup table for hot loops (ranking boundaries of many
/// faces). Entry (v, i) = C(v, i) for v <= max_n, i <= max_r.
class BinomialTable {
  public:
    BinomialTable(int max_n, int max_r)
        : max_n_(max_n), max_r_(max_r), table_((max_n + 1) * (max_r + 1), 0) {
        for (int v = 0; v <= max_n; ++v) {
            at(v, 0) = 1;
            for (int i = 1; i <= max_r; ++i)
                at(v, i) = (i > v) ? 0 : (v == i ? 1 : at(v - 1, i - 1) + at(v - 1, i));
        }
    }

    std::uint64_t operator()(int v, int i) const {
        return (i < 0 || i > max_r_ || v < 0) ? (i == 0 ? 1 : 0) : at(v, i);
    }

    int max_n() const { return max_n_; }
    int max_r() const { return max_r_; }

  private:
    std::uint64_t& at(int v, int i) { return table_[static_cast<std::size_t>(v) * (max_r_ + 1) + i]; }
    std::uint64_t at(int v, int i) const { return table_[static_cast<std::size_t>(v) * (max_r_ + 1) + i]; }

    int max_n_, max_r_;
    std::vector<std::uint64_t> table_;
};

inline void validate_face(std::span<const Vertex> face, int n) {
    if (face.empty()) throw std::invalid_argument("face: empty vertex list");
    Vertex prev = -1;
    for (Vertex v : face) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("face: vertex " + std::to_string(v) + " out of [0, " +
                                        std::to_string(n) + ")");
        if (v <= prev) throw std::invalid_argument("face: vertices not strictly increasing");
        prev = v;
    }
}

/// Colex rank of a face among all subsets of [0, n) of the same size.
inline FaceRank face_rank(std::span<const Vertex> face, int n) {
    validate_face(face, n);
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < face.size(); ++i)
        r += binomial(face[i], static_cast<std::int64_t>(i) + 1);
    return r;
}

/// Unrank into a caller-provided buffer of length `size` (no validation,
/// no allocation). `rank` must be < C(n, size) for a meaningful result.
inline void face_unrank_into(FaceRank rank, int size, int n, std::span<Vertex> out,
                             const BinomialTable& bt) {
    int bound = n;
    for (int i = size - 1; i >= 0; --i) {
        int v = bound - 1;
        while (bt(v, i + 1) > rank) --v;
        out[i] = v;
        rank -= bt(v, i + 1);
        bound = v;
    }
}

/// Inverse of face_rank: the unique size-`size` subset of [0, n) with the
/// given colex rank.
inline Face face_unrank(FaceRank rank, int size, int n) {
    if (size < 1 || size > n) throw std::invalid_argument("face_unrank: bad size");
    if (rank >= binomial(n, size)) throw std::invalid_argument("face_unrank: rank out of range");
    BinomialTable bt(n, size);
    Face f(static_cast<std::size_t>(size));
    face_unrank_into(rank, size, n, f, bt);
    return f;
}

/// Colex ranks of the |face| subfaces obtained by deleting one vertex, in
/// deletion-index order. `out` must have length face.size(). Faces of size 1
/// yield the empty face, rank 0 (the reduced convention).
inline void boundary_ranks_into(std::span<const Vertex> face, std::span<FaceRank> out,
                                const BinomialTable& bt) {
    const int sz = static_cast<int>(face.size());
    // prefix[m] = rank contribution of vertices before position m at their own index,
    // suffix built on the fly: vertices after position m drop one index slot.
    std::uint64_t prefix = 0;
    for (int m = 0; m < sz; ++m) {
        std::uint64_t r = prefix;
        for (int i = m + 1; i < sz; ++i) r += bt(face[i], i);
        out[m] = r;
        prefix += bt(face[m], m + 1);
    }
}

/// The boundary of a face: all subsets with one vertex deleted, in
/// deletion-index order.
inline std::vector<Face> boundary_faces(const Face& face, int n) {
    validate_face(face, n);
    if (face.size() < 2) throw std::invalid_argument("boundary_faces: face must have >= 2 vertices");
    std::vector<Face> out;
    out.reserve(face.size());
    for (std::size_t m = 0; m < face.size(); ++m) {
        Face sub;
        sub.reserve(face.size() - 1);
        for (std::size_t i = 0; i < face.size(); ++i)
            if (i != m) sub.push_back(face[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

}  // namespace rcs
