#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cobga/gf2.hpp"
#include "cobga/word.hpp"

namespace cobga::testing {

// Builds a matrix from row strings, e.g. {"100", "101", "010"}.
inline BitMatrix matrix_from_rows(const std::vector<std::string>& rows) {
    BitMatrix m(static_cast<int>(rows.size()));
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(c)] == '1') m.set(r, c, true);
    return m;
}

// The worked 3x3 coordinate change: rows (1,0,0), (1,0,1), (0,1,0).
inline BitMatrix example_t3() { return matrix_from_rows({"100", "101", "010"}); }

inline ElementaryOp swap1(int i1, int j1) { return {OpKind::Swap, i1 - 1, j1 - 1}; }
inline ElementaryOp add1(int i1, int j1) { return {OpKind::Add, i1 - 1, j1 - 1}; }

// Random word that is NOT built by random_word (independent construction for
// oracle-style checks).
inline BasisWord arbitrary_word(int n, int len, Rng& rng) {
    BasisWord w{n, {}};
    for (int k = 0; k < len; ++k) w.ops.push_back(random_op(n, rng));
    return w;
}

}  // namespace cobga::testing
