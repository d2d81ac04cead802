#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cobga/rng.hpp"

namespace cobga {

// Dense bit-packed vector over Z2 (addition = XOR, multiplication = AND).
// Bit i lives in word i/64 at position i%64; tail bits of the last word are
// kept zero so whole-word comparisons and popcounts are exact.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int n) : n_(n), w_(words_for(n), 0) {}

    static BitVector zeros(int n) { return BitVector(n); }
    static BitVector ones(int n);
    static BitVector random(int n, Rng& rng);
    // Bit i of the result = bit i of `index`; enumeration order for full
    // population sweeps (index 0 .. 2^n - 1).
    static BitVector from_index(int n, u64 index);
    static BitVector from_string(const std::string& s);  // '0'/'1' chars

    int size() const { return n_; }
    bool get(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set(int i, bool value) {
        u64 mask = u64imm(1) << (i & 63);
        if (value)
            w_[static_cast<size_t>(i) >> 6] |= mask;
        else
            w_[static_cast<size_t>(i) >> 6] &= ~mask;
    }
    void flip(int i) { w_[static_cast<size_t>(i) >> 6] ^= u64imm(1) << (i & 63); }

    int popcount() const;

    BitVector operator^(const BitVector& o) const;
    bool operator==(const BitVector&) const = default;

    std::string to_string() const;

    const std::vector<u64>& words() const { return w_; }
    std::vector<u64>& words() { return w_; }

    static size_t words_for(int n) { return (static_cast<size_t>(n) + 63) / 64; }

private:
    static constexpr u64 u64imm(u64 v) { return v; }

    int n_ = 0;
    std::vector<u64> w_;
};

// Dense square bit matrix over Z2, rows packed like BitVector. Row operations
// (XOR of whole rows, swaps) are word-parallel, which is what keeps the
// basis-evaluation cost of a transform at l^2*s bit ops instead of scalar ones.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), stride_(BitVector::words_for(n)), w_(stride_ * n, 0) {}

    static BitMatrix identity(int n);
    static BitMatrix random(int n, Rng& rng);  // iid fair entries (may be singular)

    int dim() const { return n_; }

    bool get(int r, int c) const { return (row_ptr(r)[static_cast<size_t>(c) >> 6] >> (c & 63)) & 1; }
    void set(int r, int c, bool value) {
        u64 mask = static_cast<u64>(1) << (c & 63);
        if (value)
            row_ptr(r)[static_cast<size_t>(c) >> 6] |= mask;
        else
            row_ptr(r)[static_cast<size_t>(c) >> 6] &= ~mask;
    }

    // row dst ^= row src
    void xor_row_from(int dst, int src);
    void swap_rows(int a, int b);

    BitVector row(int r) const;
    void set_row(int r, const BitVector& v);
    std::string row_string(int r) const;

    bool operator==(const BitMatrix&) const = default;

    const u64* row_ptr(int r) const { return w_.data() + static_cast<size_t>(r) * stride_; }
    u64* row_ptr(int r) { return w_.data() + static_cast<size_t>(r) * stride_; }
    size_t stride() const { return stride_; }

private:
    int n_ = 0;
    size_t stride_ = 0;
    std::vector<u64> w_;
};

// result_i = XOR over j of (m[i][j] AND v[j]); throws on dimension mismatch.
BitVector mat_vec_mul(const BitMatrix& m, const BitVector& v);

// Standard matrix product with XOR accumulation; throws on dimension mismatch.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

// Rank over Z2 by forward elimination.
int gf2_rank(const BitMatrix& m);

bool is_nonsingular(const BitMatrix& m);

// Gauss-Jordan inverse; pivot is always the lowest-index candidate row, so the
// elimination is deterministic. Returns nullopt when the matrix is singular.
std::optional<BitMatrix> inverse(const BitMatrix& m);

// Elementary matrices. Indices are 0-based rows here; the 1-based convention
// of the text formats is converted at the I/O boundary.
// swap: identity with rows i and j exchanged.
// add:  identity plus a 1 at entry (j, i); left-multiplying adds row i to row j.
BitMatrix elementary_swap(int n, int i, int j);
BitMatrix elementary_add(int n, int i, int j);

// Maps every vector through t, preserving order; throws on dimension mismatch.
std::vector<BitVector> change_basis(const BitMatrix& t, const std::vector<BitVector>& pop);

}  // namespace cobga
