/**
 * Hypergraph connectivity of the (k-1)-faces. The hypervertices are all
 * C(n, k) (k-1)-faces; every present k-face joins its k+1 boundary faces
 * into one class. Union-find with path compression and union by size.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rcs/combinatorics.hpp"
#include "rcs/complex.hpp"

namespace rcs {

class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
    }

    std::uint32_t find(std::uint32_t x) {
        std::uint32_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            const std::uint32_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    std::size_t components() const { return components_; }
    std::uint64_t component_size(std::uint32_t x) { return size_[find(x)]; }

  private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint64_t> size_;
    std::size_t components_;
};

struct ComponentProfile {
    std::uint64_t num_components = 0;
    std::uint64_t isolated_count = 0;
    std::uint64_t largest_size = 0;
    std::vector<std::uint64_t> sizes;  // all component sizes, descending
};

/// Number of (k-1)-faces contained in no present k-face.
inline std::uint64_t isolated_count(const SimplicialComplexK& y) {
    validate_complex(y);
    const std::uint64_t nlow = y.num_lower_faces();
    std::vector<bool> covered(nlow, false);
    BinomialTable bt(y.n, y.k + 1);
    std::vector<Vertex> buf(static_cast<std::size_t>(y.k) + 1);
    std::vector<FaceRank> br(static_cast<std::size_t>(y.k) + 1);
    for (FaceRank r : y.kfaces) {
        face_unrank_into(r, y.k + 1, y.n, buf, bt);
        boundary_ranks_into(buf, br, bt);
        for (FaceRank b : br) covered[b] = true;
    }
    std::uint64_t isolated = 0;
    for (bool c : covered)
        if (!c) ++isolated;
    return isolated;
}

inline ComponentProfile components(const SimplicialComplexK& y) {
    validate_complex(y);
    const std::uint64_t nlow = y.num_lower_faces();
    if (nlow > (1ULL << 31)) throw std::invalid_argument("components: instance too large");
    UnionFind uf(nlow);
    std::vector<std::uint32_t> degree(nlow, 0);
    BinomialTable bt(y.n, y.k + 1);
    std::vector<Vertex> buf(static_cast<std::size_t>(y.k) + 1);
    std::vector<FaceRank> br(static_cast<std::size_t>(y.k) + 1);
    for (FaceRank r : y.kfaces) {
        face_unrank_into(r, y.k + 1, y.n, buf, bt);
        boundary_ranks_into(buf, br, bt);
        for (std::size_t i = 1; i < br.size(); ++i)
            uf.unite(static_cast<std::uint32_t>(br[0]), static_cast<std::uint32_t>(br[i]));
        for (FaceRank b : br) ++degree[b];
    }

    ComponentProfile profile;
    profile.num_components = uf.components();
    std::vector<std::uint64_t> size_of_root(nlow, 0);
    for (std::uint64_t f = 0; f < nlow; ++f) ++size_of_root[uf.find(static_cast<std::uint32_t>(f))];
    for (std::uint64_t f = 0; f < nlow; ++f)
        if (size_of_root[f] > 0) profile.sizes.push_back(size_of_root[f]);
    std::sort(profile.sizes.begin(), profile.sizes.end(), std::greater<>());
    profile.largest_size = profile.sizes.empty() ? 0 : profile.sizes.front();
    for (std::uint64_t f = 0; f < nlow; ++f)
        if (degree[f] == 0) ++profile.isolated_count;
    return profile;
}

/// Every two (k-1)-faces joined by a chain of (k-1)-faces whose consecutive
/// unions are present k-faces.
inline bool is_hypergraph_connected(const SimplicialComplexK& y) {
    return components(y).num_components == 1;
}

}  // namespace rcs
