/**
 * Brute-force ground truth at small n.
 *
 * Cochains are enumerated as dense bit masks over the C(n,k) (k-1)-faces,
 * which caps instances at C(n,k) <= 24 bits (and C(n,k-1) <= 24 for the
 * coboundary enumeration); larger inputs get a capacity error rather than a
 * silent truncation.
 *
 * The survey enumerates every nontrivial cocycle of a complex, flags the
 * ones of minimal support within their coset f + B and the ones of minimal
 * support among all nontrivial cocycles, and records the support statistics
 * used by the structure checks: max degree of the support hypergraph, the
 * count X(f) of k-faces meeting the support an odd number of times, and the
 * number of nontrivial support components.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcs/cohomology.hpp"
#include "rcs/combinatorics.hpp"
#include "rcs/complex.hpp"
#include "rcs/connectivity.hpp"

namespace rcs {

class capacity_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kOracleMaxBits = 24;

namespace detail {

inline void require_bits(std::uint64_t count, const char* what) {
    if (count > kOracleMaxBits)
        throw capacity_error(std::string(what) + ": " + std::to_string(count) +
                             " faces exceed the enumeration bound of " +
                             std::to_string(kOracleMaxBits));
}

/// Mask of the (size-1)-subfaces of each listed size-`size` face, over the
/// colex ranks of the subfaces.
inline std::vector<std::uint32_t> boundary_mask_per_face(int n, int size,
                                                         std::span<const FaceRank> faces) {
    BinomialTable bt(n, size);
    std::vector<Vertex> buf(static_cast<std::size_t>(size));
    std::vector<FaceRank> br(static_cast<std::size_t>(size));
    std::vector<std::uint32_t> masks;
    masks.reserve(faces.size());
    for (FaceRank r : faces) {
        face_unrank_into(r, size, n, buf, bt);
        boundary_ranks_into(buf, br, bt);
        std::uint32_t m = 0;
        for (FaceRank b : br) m |= 1u << b;
        masks.push_back(m);
    }
    return masks;
}

inline std::vector<std::uint32_t> boundary_mask_all_faces(int n, int size) {
    const std::uint64_t total = binomial(n, size);
    std::vector<FaceRank> all(total);
    for (std::uint64_t r = 0; r < total; ++r) all[r] = r;
    return boundary_mask_per_face(n, size, all);
}

inline bool is_cocycle_mask(std::uint32_t f, std::span<const std::uint32_t> present_masks) {
    for (std::uint32_t pm : present_masks)
        if (std::popcount(f & pm) & 1) return false;
    return true;
}

/// All distinct coboundary masks of the complete lower skeleton, i.e. the
/// row space of I_{k-2} enumerated through all 2^{C(n,k-1)} lower cochains
/// (Gray-code walk). For k = 1 the reduced convention gives {0, all-ones}.
inline std::vector<std::uint32_t> coboundary_masks(int n, int k) {
    const std::uint64_t nlow = binomial(n, k);
    require_bits(nlow, "coboundary enumeration");
    if (k == 1) return {0u, static_cast<std::uint32_t>((1ULL << nlow) - 1)};
    const std::uint64_t nlower2 = binomial(n, k - 1);
    require_bits(nlower2, "coboundary enumeration");
    // row_mask[tau] = faces of the complete (k-1)-skeleton containing the
    // (k-2)-face tau = the coboundary of tau's indicator.
    std::vector<std::uint32_t> row_mask(nlower2, 0);
    {
        BinomialTable bt(n, k);
        std::vector<Vertex> buf(static_cast<std::size_t>(k));
        std::vector<FaceRank> br(static_cast<std::size_t>(k));
        for (std::uint64_t s = 0; s < nlow; ++s) {
            face_unrank_into(s, k, n, buf, bt);
            boundary_ranks_into(buf, br, bt);
            for (FaceRank tau : br) row_mask[tau] |= 1u << s;
        }
    }
    std::vector<bool> seen(1ULL << nlow, false);
    std::vector<std::uint32_t> out;
    std::uint32_t cur = 0;
    seen[0] = true;
    out.push_back(0);
    for (std::uint64_t g = 1; g < (1ULL << nlower2); ++g) {
        cur ^= row_mask[std::countr_zero(g)];
        if (!seen[cur]) {
            seen[cur] = true;
            out.push_back(cur);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct SupportStats {
    std::uint32_t max_degree = 0;
    std::uint32_t num_nontrivial_components = 0;
};

/// Degree and component structure of the support hypergraph of a mask over
/// the (k-1)-faces: hypervertices are the (k-2)-faces, and each support
/// face joins its k subfaces.
inline SupportStats support_stats_mask(std::uint32_t f, int n, int k) {
    const std::uint64_t nhv = binomial(n, k - 1);
    std::vector<std::uint32_t> degree(nhv, 0);
    UnionFind uf(nhv);
    BinomialTable bt(n, k);
    std::vector<Vertex> buf(static_cast<std::size_t>(k));
    std::vector<FaceRank> br(static_cast<std::size_t>(k));
    const std::uint64_t nlow = binomial(n, k);
    for (std::uint64_t s = 0; s < nlow; ++s) {
        if (!(f >> s & 1)) continue;
        face_unrank_into(s, k, n, buf, bt);
        boundary_ranks_into(buf, br, bt);
        for (FaceRank tau : br) ++degree[tau];
        for (std::size_t i = 1; i < br.size(); ++i)
            uf.unite(static_cast<std::uint32_t>(br[0]), static_cast<std::uint32_t>(br[i]));
    }
    SupportStats st;
    std::vector<std::uint32_t> roots;
    for (std::uint64_t t = 0; t < nhv; ++t) {
        st.max_degree = std::max(st.max_degree, degree[t]);
        if (degree[t] > 0) roots.push_back(uf.find(static_cast<std::uint32_t>(t)));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    st.num_nontrivial_components = static_cast<std::uint32_t>(roots.size());
    return st;
}

inline std::uint64_t x_count_mask(std::uint32_t f, std::span<const std::uint32_t> all_kface_masks) {
    std::uint64_t x = 0;
    for (std::uint32_t m : all_kface_masks) x += std::popcount(f & m) & 1;
    return x;
}

}  // namespace detail

/// Exhaustive reduced Betti number: enumerate all 2^{C(n,k)} (k-1)-cochains,
/// count cocycles and coboundaries, return log2|Z| - log2|B|.
inline std::uint64_t brute_betti(const SimplicialComplexK& y) {
    validate_complex(y);
    const std::uint64_t nlow = y.num_lower_faces();
    detail::require_bits(nlow, "brute_betti");
    const auto present_masks = detail::boundary_mask_per_face(y.n, y.k + 1, y.kfaces);
    std::uint64_t num_cocycles = 0;
    for (std::uint64_t f = 0; f < (1ULL << nlow); ++f)
        if (detail::is_cocycle_mask(static_cast<std::uint32_t>(f), present_masks)) ++num_cocycles;
    const std::uint64_t num_coboundaries = detail::coboundary_masks(y.n, y.k).size();
    if (!std::has_single_bit(num_cocycles) || !std::has_single_bit(num_coboundaries))
        throw std::logic_error("brute_betti: |Z| and |B| must be powers of two");
    return static_cast<std::uint64_t>(std::countr_zero(num_cocycles)) -
           static_cast<std::uint64_t>(std::countr_zero(num_coboundaries));
}

/// Support graph of a 1-cochain (k = 2): edges are the support of f.
struct SupportGraph {
    int n = 0;
    std::vector<FaceRank> edges;           // colex edge ranks in the support
    std::vector<int> degree_sequence;      // per vertex
    int num_nontrivial_components = 0;
};

inline SupportGraph support_graph(const Cochain& f, int n) {
    if (f.degree != 1 || f.values.size() != binomial(n, 2))
        throw std::invalid_argument("support_graph: expected a degree-1 cochain over C(n,2) edges");
    SupportGraph g;
    g.n = n;
    g.degree_sequence.assign(n, 0);
    UnionFind uf(static_cast<std::size_t>(n));
    BinomialTable bt(n, 2);
    std::vector<Vertex> buf(2);
    for (std::uint64_t e = 0; e < f.values.size(); ++e) {
        if (!f.values.get(e)) continue;
        g.edges.push_back(e);
        face_unrank_into(e, 2, n, buf, bt);
        ++g.degree_sequence[buf[0]];
        ++g.degree_sequence[buf[1]];
        uf.unite(static_cast<std::uint32_t>(buf[0]), static_cast<std::uint32_t>(buf[1]));
    }
    std::vector<std::uint32_t> roots;
    for (int v = 0; v < n; ++v)
        if (g.degree_sequence[v] > 0) roots.push_back(uf.find(static_cast<std::uint32_t>(v)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    g.num_nontrivial_components = static_cast<int>(roots.size());
    return g;
}

/// X(f): the number of (j+1)-faces of the complete skeleton containing an
/// odd number of support faces of the degree-j cochain f. For j = 1 these
/// are the triangles with 1 or 3 support edges.
inline std::uint64_t x_count(const Cochain& f, int n) {
    const int size = f.degree + 2;  // vertex count of the faces being counted
    if (size > n) throw std::invalid_argument("x_count: degree too large for n");
    if (f.values.size() != binomial(n, f.degree + 1))
        throw std::invalid_argument("x_count: cochain length mismatch");
    const std::uint64_t total = binomial(n, size);
    BinomialTable bt(n, size);
    std::vector<Vertex> buf(static_cast<std::size_t>(size));
    std::vector<FaceRank> br(static_cast<std::size_t>(size));
    std::uint64_t x = 0;
    for (std::uint64_t r = 0; r < total; ++r) {
        face_unrank_into(r, size, n, buf, bt);
        boundary_ranks_into(buf, br, bt);
        bool parity = false;
        for (FaceRank b : br) parity ^= f.values.get(b);
        x += parity;
    }
    return x;
}

struct CocycleSurveyRecord {
    std::uint32_t support_size = 0;
    std::uint32_t max_degree = 0;
    std::uint64_t x_count = 0;
    std::uint32_t num_nontrivial_components = 0;
    bool is_minimal_in_coset = false;
    /// Support attains the minimum over all nontrivial cocycles of this
    /// complex (the extremal class of the structure lemmas).
    bool is_min_support_overall = false;
};

/// Enumerate every nontrivial cocycle of the complex (complete lower
/// skeleton paired with the complex's k-face set) and record its support
/// statistics and minimality flags.
inline std::vector<CocycleSurveyRecord> minimal_cocycle_survey(const SimplicialComplexK& y) {
    validate_complex(y);
    if (y.k < 2) throw std::invalid_argument("minimal_cocycle_survey: requires k >= 2");
    const std::uint64_t nlow = y.num_lower_faces();
    detail::require_bits(nlow, "minimal_cocycle_survey");
    const auto present_masks = detail::boundary_mask_per_face(y.n, y.k + 1, y.kfaces);
    const auto cobounds = detail::coboundary_masks(y.n, y.k);
    std::vector<bool> is_cob(1ULL << nlow, false);
    for (std::uint32_t b : cobounds) is_cob[b] = true;

    std::vector<std::uint32_t> nontrivial;
    std::uint32_t min_support = static_cast<std::uint32_t>(nlow) + 1;
    for (std::uint64_t fm = 0; fm < (1ULL << nlow); ++fm) {
        const auto f = static_cast<std::uint32_t>(fm);
        if (is_cob[f] || !detail::is_cocycle_mask(f, present_masks)) continue;
        nontrivial.push_back(f);
        min_support = std::min(min_support, static_cast<std::uint32_t>(std::popcount(f)));
    }

    const auto all_kface_masks = detail::boundary_mask_all_faces(y.n, y.k + 1);
    std::vector<CocycleSurveyRecord> records;
    records.reserve(nontrivial.size());
    for (std::uint32_t f : nontrivial) {
        CocycleSurveyRecord rec;
        rec.support_size = static_cast<std::uint32_t>(std::popcount(f));
        std::uint32_t coset_min = rec.support_size;
        for (std::uint32_t b : cobounds)
            coset_min = std::min(coset_min, static_cast<std::uint32_t>(std::popcount(f ^ b)));
        rec.is_minimal_in_coset = (rec.support_size == coset_min);
        rec.is_min_support_overall = (rec.support_size == min_support);
        const auto st = detail::support_stats_mask(f, y.n, y.k);
        rec.max_degree = st.max_degree;
        rec.num_nontrivial_components = st.num_nontrivial_components;
        rec.x_count = detail::x_count_mask(f, all_kface_masks);
        records.push_back(rec);
    }
    return records;
}

struct StructureViolation {
    std::size_t record_index = 0;
    std::string kind;  // "max_degree" | "x_lower_bound" | "nontrivial_components"
};

struct ViolationReport {
    std::vector<StructureViolation> violations;
    bool empty() const { return violations.empty(); }
};

/// Check the structure bounds on survey records. The degree bound
/// max_degree <= floor((n-k+1)/2) and the count bound X(f) >= n*m/(k+1)
/// apply to cocycles minimal in their coset; the single-nontrivial-component
/// property applies to the extremal class of globally minimal support
/// (coset-minimal cocycles can split into several components).
inline ViolationReport check_structure_bounds(std::span<const CocycleSurveyRecord> records, int n,
                                              int k) {
    ViolationReport report;
    const std::uint32_t degree_cap = static_cast<std::uint32_t>((n - k + 1) / 2);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.is_minimal_in_coset) {
            if (r.max_degree > degree_cap) report.violations.push_back({i, "max_degree"});
            if (r.x_count * static_cast<std::uint64_t>(k + 1) <
                static_cast<std::uint64_t>(n) * r.support_size)
                report.violations.push_back({i, "x_lower_bound"});
        }
        if (r.is_min_support_overall && r.num_nontrivial_components > 1)
            report.violations.push_back({i, "nontrivial_components"});
    }
    return report;
}

/// Smallest support of a nonzero coboundary of the complete lower skeleton
/// (for k = 2 this is the minimum cut of K_n, n-1).
inline std::uint64_t min_coboundary_weight(int n, int k) {
    const auto cobounds = detail::coboundary_masks(n, k);
    std::uint64_t best = UINT64_MAX;
    for (std::uint32_t b : cobounds)
        if (b != 0) best = std::min<std::uint64_t>(best, static_cast<std::uint64_t>(std::popcount(b)));
    return best;
}

}  // namespace rcs
