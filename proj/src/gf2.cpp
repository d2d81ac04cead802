#include "cobga/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace cobga {

namespace {

u64 tail_mask(int n) {
    int rem = n & 63;
    return rem == 0 ? ~static_cast<u64>(0) : ((static_cast<u64>(1) << rem) - 1);
}

void check_index_pair(int n, int i, int j) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("row index out of range");
    if (i == j) throw std::invalid_argument("row indices must differ");
}

}  // namespace

BitVector BitVector::ones(int n) {
    BitVector v(n);
    if (n == 0) return v;
    for (auto& w : v.w_) w = ~static_cast<u64>(0);
    v.w_.back() &= tail_mask(n);
    return v;
}

BitVector BitVector::random(int n, Rng& rng) {
    BitVector v(n);
    if (n == 0) return v;
    for (auto& w : v.w_) w = rng.next();
    v.w_.back() &= tail_mask(n);
    return v;
}

BitVector BitVector::from_index(int n, u64 index) {
    BitVector v(n);
    if (n == 0) return v;
    v.w_[0] = index;
    if (n < 64) v.w_[0] &= tail_mask(n);
    return v;
}

BitVector BitVector::from_string(const std::string& s) {
    BitVector v(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(static_cast<int>(i), true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string must contain only '0'/'1'");
    }
    return v;
}

int BitVector::popcount() const {
    int c = 0;
    for (u64 w : w_) c += std::popcount(w);
    return c;
}

BitVector BitVector::operator^(const BitVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVector XOR: dimension mismatch");
    BitVector r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] ^ o.w_[k];
    return r;
}

std::string BitVector::to_string() const {
    std::string s(static_cast<size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (get(i)) s[static_cast<size_t>(i)] = '1';
    return s;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::random(int n, Rng& rng) {
    BitMatrix m(n);
    u64 mask = tail_mask(n);
    for (int r = 0; r < n; ++r) {
        u64* p = m.row_ptr(r);
        for (size_t k = 0; k < m.stride_; ++k) p[k] = rng.next();
        if (m.stride_ > 0) p[m.stride_ - 1] &= mask;
    }
    return m;
}

void BitMatrix::xor_row_from(int dst, int src) {
    u64* d = row_ptr(dst);
    const u64* s = row_ptr(src);
    for (size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    u64* pa = row_ptr(a);
    u64* pb = row_ptr(b);
    for (size_t k = 0; k < stride_; ++k) std::swap(pa[k], pb[k]);
}

BitVector BitMatrix::row(int r) const {
    BitVector v(n_);
    const u64* p = row_ptr(r);
    for (size_t k = 0; k < stride_; ++k) v.words()[k] = p[k];
    return v;
}

void BitMatrix::set_row(int r, const BitVector& v) {
    if (v.size() != n_) throw std::invalid_argument("set_row: dimension mismatch");
    u64* p = row_ptr(r);
    for (size_t k = 0; k < stride_; ++k) p[k] = v.words()[k];
}

std::string BitMatrix::row_string(int r) const { return row(r).to_string(); }

BitVector mat_vec_mul(const BitMatrix& m, const BitVector& v) {
    if (m.dim() != v.size()) throw std::invalid_argument("mat_vec_mul: dimension mismatch");
    BitVector out(m.dim());
    const auto& vw = v.words();
    for (int r = 0; r < m.dim(); ++r) {
        const u64* p = m.row_ptr(r);
        u64 acc = 0;
        for (size_t k = 0; k < m.stride(); ++k) acc ^= p[k] & vw[k];
        // popcount(a)+popcount(b) == popcount(a^b) (mod 2), so the XOR of the
        // masked words carries the parity of the whole dot product.
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("mat_mul: dimension mismatch");
    int n = a.dim();
    BitMatrix out(n);
    for (int r = 0; r < n; ++r) {
        u64* o = out.row_ptr(r);
        for (int k = 0; k < n; ++k) {
            if (!a.get(r, k)) continue;
            const u64* brow = b.row_ptr(k);
            for (size_t w = 0; w < out.stride(); ++w) o[w] ^= brow[w];
        }
    }
    return out;
}

int gf2_rank(const BitMatrix& m) {
    BitMatrix a = m;
    int n = a.dim();
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (a.get(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        a.swap_rows(rank, pivot);
        for (int r = rank + 1; r < n; ++r)
            if (a.get(r, col)) a.xor_row_from(r, rank);
        ++rank;
    }
    return rank;
}

bool is_nonsingular(const BitMatrix& m) { return gf2_rank(m) == m.dim(); }

std::optional<BitMatrix> inverse(const BitMatrix& m) {
    int n = m.dim();
    BitMatrix left = m;
    BitMatrix right = BitMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (left.get(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        left.swap_rows(col, pivot);
        right.swap_rows(col, pivot);
        for (int r = 0; r < n; ++r) {
            if (r != col && left.get(r, col)) {
                left.xor_row_from(r, col);
                right.xor_row_from(r, col);
            }
        }
    }
    return right;
}

BitMatrix elementary_swap(int n, int i, int j) {
    check_index_pair(n, i, j);
    BitMatrix m = BitMatrix::identity(n);
    m.swap_rows(i, j);
    return m;
}

BitMatrix elementary_add(int n, int i, int j) {
    check_index_pair(n, i, j);
    BitMatrix m = BitMatrix::identity(n);
    m.set(j, i, true);
    return m;
}

std::vector<BitVector> change_basis(const BitMatrix& t, const std::vector<BitVector>& pop) {
    std::vector<BitVector> out;
    out.reserve(pop.size());
    for (const auto& v : pop) out.push_back(mat_vec_mul(t, v));
    return out;
}

}  // namespace cobga
