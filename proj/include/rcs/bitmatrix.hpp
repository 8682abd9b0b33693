/**
 * Dense bit-packed linear algebra over GF(2).
 *
 * BitVec:      packed bit vector (padding bits in the last word are zero).
 * BitMatrix:   row-major packed matrix; rank by in-place word-parallel
 *              Gaussian elimination on a copy.
 * ColumnBasis: incremental column-space basis. Reduced columns are kept
 *               fully reduced (each has a 1 at its own pivot position and 0
 *               at every other pivot position), so reducing an incoming
 *               vector costs one XOR per pivot position it touches. For the
 *               (k+1)-sparse boundary columns of the growth process this
 *               makes a failed insertion O(k) row XORs.
 */
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rcs {

class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t w) const { return words_[w]; }
    std::span<const std::uint64_t> words() const { return words_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= 1ULL << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

    void clear() { words_.assign(words_.size(), 0); }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Index of the lowest set bit, or -1 if none.
    std::ptrdiff_t lowest_set_bit() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<std::ptrdiff_t>(w * 64 + std::countr_zero(words_[w]));
        return -1;
    }

    void xor_with(const BitVec& other) {
        if (other.size_ != size_) throw std::invalid_argument("BitVec: size mismatch in xor");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

    void xor_with(std::span<const std::uint64_t> other_words) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other_words[w];
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          bits_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_per_row_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c) {
        bits_[r * words_per_row_ + (c >> 6)] |= 1ULL << (c & 63);
    }

    std::span<std::uint64_t> row(std::size_t r) {
        return {bits_.data() + r * words_per_row_, words_per_row_};
    }
    std::span<const std::uint64_t> row(std::size_t r) const {
        return {bits_.data() + r * words_per_row_, words_per_row_};
    }

    void xor_row(std::size_t dst, std::size_t src) {
        auto* d = bits_.data() + dst * words_per_row_;
        const auto* s = bits_.data() + src * words_per_row_;
        for (std::size_t w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
    }

    BitVec row_copy(std::size_t r) const {
        BitVec v(cols_);
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) v.set(c);
        return v;
    }

    std::size_t row_popcount(std::size_t r) const {
        std::size_t c = 0;
        for (std::uint64_t w : row(r)) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t col_popcount(std::size_t c) const {
        std::size_t cnt = 0;
        for (std::size_t r = 0; r < rows_; ++r) cnt += get(r, c);
        return cnt;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r);
        return t;
    }

    /// Rank over GF(2). Works on a copy; the matrix itself is not mutated.
    std::size_t rank() const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }

  private:
    friend std::size_t gf2_eliminate(BitMatrix& m, std::vector<std::int32_t>& pivot_row_of_col);

    std::size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// In-place row-echelon elimination. Fills pivot_row_of_col (size cols,
/// -1 = no pivot) and returns the rank.
inline std::size_t gf2_eliminate(BitMatrix& m, std::vector<std::int32_t>& pivot_row_of_col) {
    pivot_row_of_col.assign(m.cols_, -1);
    std::size_t rank = 0;
    const std::size_t wpr = m.words_per_row_;
    for (std::size_t r = 0; r < m.rows_; ++r) {
        auto row = m.row(r);
        std::size_t wi = 0;
        while (wi < wpr) {
            const std::uint64_t w = row[wi];
            if (w == 0) {
                ++wi;
                continue;
            }
            const std::size_t b = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            const std::int32_t pr = pivot_row_of_col[b];
            if (pr < 0) {
                pivot_row_of_col[b] = static_cast<std::int32_t>(r);
                ++rank;
                break;
            }
            // The pivot row leads at b too, so the XOR clears b and leaves
            // everything below b zero; resume scanning from the same word.
            m.xor_row(r, static_cast<std::size_t>(pr));
        }
    }
    return rank;
}

inline std::size_t BitMatrix::rank() const {
    BitMatrix scratch(*this);
    std::vector<std::int32_t> pivots;
    return gf2_eliminate(scratch, pivots);
}

/// True iff v lies in the GF(2) row space of m: eliminate a copy of m, then
/// reduce v against the pivot rows.
inline bool in_row_space(const BitMatrix& m, const BitVec& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_row_space: dimension mismatch");
    BitMatrix scratch(m);
    std::vector<std::int32_t> pivot_row_of_col;
    gf2_eliminate(scratch, pivot_row_of_col);
    BitVec x(v);
    const std::size_t nw = x.word_count();
    std::size_t wi = 0;
    while (wi < nw) {
        const std::uint64_t w = x.word(wi);
        if (w == 0) {
            ++wi;
            continue;
        }
        const std::size_t b = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
        const std::int32_t pr = pivot_row_of_col[b];
        if (pr < 0) return false;
        x.xor_with(scratch.row(static_cast<std::size_t>(pr)));
    }
    return true;
}

class ColumnBasis {
  public:
    explicit ColumnBasis(std::size_t ambient_dim)
        : ambient_(ambient_dim), pivot_at_(ambient_dim, -1), scratch_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return cols_.size(); }
    const std::vector<std::size_t>& pivot_positions() const { return pivot_pos_; }
    const BitVec& reduced_column(std::size_t i) const { return cols_[i]; }

    /// Insert a column; returns true iff it was independent of the basis.
    bool insert(const BitVec& col) {
        if (col.size() != ambient_) throw std::invalid_argument("ColumnBasis: dimension mismatch");
        scratch_ = col;
        return reduce_scratch_and_commit();
    }

    /// Insert the column whose set bits are `positions` (duplicates cancel
    /// mod 2). Avoids allocating on the dependent-column path.
    bool insert_sparse(std::span<const std::uint64_t> positions) {
        scratch_.clear();
        for (std::uint64_t p : positions) {
            if (p >= ambient_) throw std::invalid_argument("ColumnBasis: bit position out of range");
            scratch_.flip(p);
        }
        return reduce_scratch_and_commit();
    }

    /// Remainder of v after reduction against the basis; zero iff v is in
    /// the span.
    BitVec reduce(BitVec v) const {
        if (v.size() != ambient_) throw std::invalid_argument("ColumnBasis: dimension mismatch");
        reduce_in_place(v);
        return v;
    }

    bool contains(const BitVec& v) const { return reduce(v).none(); }

  private:
    void reduce_in_place(BitVec& x) const {
        const std::size_t nw = x.word_count();
        for (std::size_t wi = 0; wi < nw; ++wi) {
            std::uint64_t w = x.word(wi);
            while (w != 0) {
                const int bo = std::countr_zero(w);
                const std::size_t b = wi * 64 + static_cast<std::size_t>(bo);
                const std::int32_t pi = pivot_at_[b];
                if (pi >= 0) {
                    // Fully reduced pivot: clears b, cannot set any other
                    // pivot position, touches only bits > b.
                    x.xor_with(cols_[static_cast<std::size_t>(pi)]);
                    w = x.word(wi);
                    w = (bo == 63) ? 0 : (w & (~0ULL << (bo + 1)));
                } else {
                    w &= w - 1;  // skip the non-pivot bit
                }
            }
        }
    }

    bool reduce_scratch_and_commit() {
        reduce_in_place(scratch_);
        if (scratch_.none()) return false;
        const auto b = static_cast<std::size_t>(scratch_.lowest_set_bit());
        // Maintain full reduction: clear the new pivot position everywhere.
        for (auto& col : cols_)
            if (col.get(b)) col.xor_with(scratch_);
        pivot_at_[b] = static_cast<std::int32_t>(cols_.size());
        pivot_pos_.push_back(b);
        cols_.push_back(scratch_);
        return true;
    }

    std::size_t ambient_;
    std::vector<std::int32_t> pivot_at_;
    std::vector<std::size_t> pivot_pos_;
    std::vector<BitVec> cols_;
    BitVec scratch_;
};

}  // namespace rcs
