#include "cobga/word.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cobga {

BitMatrix op_matrix(const ElementaryOp& op, int n) {
    return op.kind == OpKind::Swap ? elementary_swap(n, op.i, op.j) : elementary_add(n, op.i, op.j);
}

void apply_op_left(BitMatrix& m, const ElementaryOp& op) {
    if (op.kind == OpKind::Swap)
        m.swap_rows(op.i, op.j);
    else
        m.xor_row_from(op.j, op.i);
}

BitMatrix word_to_matrix(const BasisWord& w) {
    BitMatrix m = BitMatrix::identity(w.n);
    // Accumulate the product right to left: M(op1)*...*M(opL)*I, each factor
    // applied as a row operation on the running product.
    for (auto it = w.ops.rbegin(); it != w.ops.rend(); ++it) apply_op_left(m, *it);
    return m;
}

ElementaryOp random_op(int n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("random_op: need n >= 2");
    OpKind kind = rng.coin() ? OpKind::Swap : OpKind::Add;
    int r = rng.below_int(n * (n - 1));
    int i = r / (n - 1);
    int j = r % (n - 1);
    if (j >= i) ++j;
    return ElementaryOp{kind, i, j};
}

BasisWord random_word(int n, double mean_len, double std_len, Rng& rng) {
    BasisWord w;
    w.n = n;
    if (n < 2) return w;
    long length = std::llround(rng.normal(mean_len, std_len));
    if (length < 1) length = 1;
    w.ops.reserve(static_cast<size_t>(length));
    for (long k = 0; k < length; ++k) w.ops.push_back(random_op(n, rng));
    return w;
}

namespace {

constexpr int kReplaceCost = 2;

// Wagner-Fischer table; dist[i][j] = cost of editing a[0..i) into b[0..j).
std::vector<std::vector<int>> wf_table(const BasisWord& a, const BasisWord& b) {
    size_t m = a.ops.size(), n = b.ops.size();
    std::vector<std::vector<int>> d(m + 1, std::vector<int>(n + 1, 0));
    for (size_t i = 1; i <= m; ++i) d[i][0] = static_cast<int>(i);
    for (size_t j = 1; j <= n; ++j) d[0][j] = static_cast<int>(j);
    for (size_t i = 1; i <= m; ++i) {
        for (size_t j = 1; j <= n; ++j) {
            int diag = d[i - 1][j - 1] + (a.ops[i - 1] == b.ops[j - 1] ? 0 : kReplaceCost);
            int del = d[i - 1][j] + 1;
            int ins = d[i][j - 1] + 1;
            d[i][j] = std::min({diag, del, ins});
        }
    }
    return d;
}

}  // namespace

int edit_distance(const BasisWord& a, const BasisWord& b) {
    if (a.n != b.n) throw std::invalid_argument("edit_distance: dimension mismatch");
    return wf_table(a, b)[a.ops.size()][b.ops.size()];
}

Alignment align(const BasisWord& a, const BasisWord& b) {
    if (a.n != b.n) throw std::invalid_argument("align: dimension mismatch");
    auto d = wf_table(a, b);
    size_t i = a.ops.size(), j = b.ops.size();
    Alignment al;
    while (i > 0 || j > 0) {
        if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
            al.a.push_back(a.ops[i - 1]);
            al.b.push_back(std::nullopt);
            --i;
        } else if (j > 0 && d[i][j] == d[i][j - 1] + 1) {
            al.a.push_back(std::nullopt);
            al.b.push_back(b.ops[j - 1]);
            --j;
        } else {
            al.a.push_back(a.ops[i - 1]);
            al.b.push_back(b.ops[j - 1]);
            --i;
            --j;
        }
    }
    std::reverse(al.a.begin(), al.a.end());
    std::reverse(al.b.begin(), al.b.end());
    return al;
}

int alignment_cost(const Alignment& al) {
    int cost = 0;
    for (size_t k = 0; k < al.a.size(); ++k) {
        if (!al.a[k] || !al.b[k])
            cost += 1;
        else if (!(*al.a[k] == *al.b[k]))
            cost += kReplaceCost;
    }
    return cost;
}

std::pair<BasisWord, BasisWord> crossover(const BasisWord& a, const BasisWord& b, Rng& rng) {
    Alignment al = align(a, b);
    BasisWord c1{a.n, {}}, c2{a.n, {}};
    for (size_t k = 0; k < al.a.size(); ++k) {
        bool take_a_first = rng.coin();
        const AlignedOp& first = take_a_first ? al.a[k] : al.b[k];
        const AlignedOp& second = take_a_first ? al.b[k] : al.a[k];
        if (first) c1.ops.push_back(*first);
        if (second) c2.ops.push_back(*second);
    }
    return {std::move(c1), std::move(c2)};
}

std::pair<BasisWord, int> mutate_counted(const BasisWord& w, double p, Rng& rng) {
    if (w.n < 2) return {w, 0};
    BasisWord out{w.n, {}};
    out.ops.reserve(w.ops.size() + 1);
    int events = 0;
    for (const ElementaryOp& op : w.ops) {
        if (rng.chance(p)) {
            ++events;
            switch (rng.below_int(3)) {
                case 0:  // insert before
                    out.ops.push_back(random_op(w.n, rng));
                    out.ops.push_back(op);
                    break;
                case 1:  // delete
                    break;
                default:  // replace
                    out.ops.push_back(random_op(w.n, rng));
                    break;
            }
        } else {
            out.ops.push_back(op);
        }
    }
    // Trailing insert-only slot; without it the empty word would be absorbing.
    if (rng.chance(p)) {
        ++events;
        out.ops.push_back(random_op(w.n, rng));
    }
    return {std::move(out), events};
}

BasisWord mutate(const BasisWord& w, double p, Rng& rng) { return mutate_counted(w, p, rng).first; }

}  // namespace cobga
