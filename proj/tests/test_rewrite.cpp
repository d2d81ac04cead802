#include <doctest.h>

#include "cobga/rewrite.hpp"
#include "test_helpers.hpp"

using namespace cobga;
using cobga::testing::add1;
using cobga::testing::arbitrary_word;
using cobga::testing::swap1;

namespace {

// Distinct indices idx[0..vars) drawn uniformly from 0..n-1.
void draw_distinct(int n, int vars, int idx[3], Rng& rng) {
    for (int v = 0; v < vars; ++v) {
        bool fresh = false;
        while (!fresh) {
            idx[v] = rng.below_int(n);
            fresh = true;
            for (int u = 0; u < v; ++u)
                if (idx[u] == idx[v]) fresh = false;
        }
    }
}

}  // namespace

TEST_CASE("the catalog holds exactly ten rules") {
    CHECK(rewrite_rules().size() == 10);
}

TEST_CASE("every rule preserves the word's matrix, in both directions and in context") {
    Rng rng(42);
    for (const RewriteRule& rule : rewrite_rules()) {
        CAPTURE(rule.name);
        for (int trial = 0; trial < 200; ++trial) {
            int n = rule.num_vars + rng.below_int(8 - rule.num_vars + 1);
            int idx[3] = {0, 0, 0};
            draw_distinct(n, rule.num_vars, idx, rng);

            BasisWord prefix = arbitrary_word(n, rng.below_int(4), rng);
            BasisWord suffix = arbitrary_word(n, rng.below_int(4), rng);
            bool reverse = rng.coin();
            auto pattern_ops = instantiate(reverse ? rule.rhs : rule.lhs, idx);

            BasisWord before{n, prefix.ops};
            before.ops.insert(before.ops.end(), pattern_ops.begin(), pattern_ops.end());
            before.ops.insert(before.ops.end(), suffix.ops.begin(), suffix.ops.end());

            auto after = apply_rule(before, rule, prefix.ops.size(), reverse);
            REQUIRE(after.has_value());
            CHECK(word_to_matrix(*after) == word_to_matrix(before));
            size_t expected_len = before.ops.size() -
                                  (reverse ? rule.rhs.size() : rule.lhs.size()) +
                                  (reverse ? rule.lhs.size() : rule.rhs.size());
            CHECK(after->ops.size() == expected_len);
        }
    }
}

TEST_CASE("apply_rule rejects non-matching positions") {
    const RewriteRule& swap_expand = rewrite_rules()[8];
    CHECK(swap_expand.name == "swap-expand");
    BasisWord w{4, {add1(1, 2)}};
    CHECK(!apply_rule(w, swap_expand, 0).has_value());      // Add where Swap expected
    CHECK(!apply_rule(w, swap_expand, 5).has_value());      // out of range
    BasisWord s{4, {swap1(1, 2)}};
    CHECK(apply_rule(s, swap_expand, 0).has_value());
}

TEST_CASE("patterns never unify two variables onto one index") {
    // A(1,2) A(1,2) must not match the same-target exchange (needs i != j
    // as *sources*), nor the fan patterns.
    const RewriteRule& same_target = rewrite_rules()[0];
    BasisWord w{4, {add1(1, 3), add1(1, 3)}};
    CHECK(!apply_rule(w, same_target, 0).has_value());
    BasisWord ok{4, {add1(1, 3), add1(2, 3)}};
    CHECK(apply_rule(ok, same_target, 0).has_value());
}

TEST_CASE("swap-expand realizes S = A A A on a pair") {
    const RewriteRule& swap_expand = rewrite_rules()[8];
    BasisWord s{3, {swap1(1, 2)}};
    auto expanded = apply_rule(s, swap_expand, 0);
    REQUIRE(expanded.has_value());
    CHECK(expanded->ops == std::vector<ElementaryOp>{add1(1, 2), add1(2, 1), add1(1, 2)});
    CHECK(word_to_matrix(*expanded) == word_to_matrix(s));
}

TEST_CASE("the worked chain rewrites S12 A21 A12 down to A21") {
    // Expand the swap, collapse the resulting add square, cancel the leftover
    // self-inverse pair.
    BasisWord w{4, {swap1(1, 2), add1(2, 1), add1(1, 2)}};
    BitMatrix target = word_to_matrix(w);

    auto expanded = apply_rule(w, rewrite_rules()[8], 0);  // swap-expand
    REQUIRE(expanded.has_value());
    REQUIRE(expanded->ops.size() == 5);

    auto squared = apply_rule(*expanded, rewrite_rules()[9], 0);  // add-pair-square
    REQUIRE(squared.has_value());
    REQUIRE(squared->ops.size() == 3);

    BasisWord reduced = simplify(*squared);
    CHECK(reduced.ops == std::vector<ElementaryOp>{add1(2, 1)});
    CHECK(word_to_matrix(reduced) == target);
    CHECK(word_to_matrix(reduced) == elementary_add(4, 1, 0));
}

TEST_CASE("simplify cancels involutive pairs and preserves the matrix") {
    Rng rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + rng.below_int(5);
        BasisWord w = arbitrary_word(n, rng.below_int(14), rng);
        BasisWord s = simplify(w);
        CHECK(s.ops.size() <= w.ops.size());
        CHECK(word_to_matrix(s) == word_to_matrix(w));
    }

    BasisWord doubled{3, {add1(1, 2), add1(1, 2)}};
    CHECK(simplify(doubled).ops.empty());
    BasisWord mirrored{3, {swap1(1, 2), swap1(2, 1)}};
    CHECK(simplify(mirrored).ops.empty());
}

TEST_CASE("the three-way swap chain equality holds as matrices") {
    for (int n = 3; n <= 6; ++n) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    BitMatrix lhs = mat_mul(elementary_swap(n, i, j), elementary_swap(n, j, k));
                    BitMatrix mid = mat_mul(elementary_swap(n, j, k), elementary_swap(n, i, k));
                    BitMatrix rhs = mat_mul(elementary_swap(n, i, k), elementary_swap(n, i, j));
                    CHECK(lhs == mid);
                    CHECK(mid == rhs);
                }
    }
}

TEST_CASE("row identities of elementary left-multiplication") {
    Rng rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + rng.below_int(7);
        int i = rng.below_int(n);
        int j = rng.below_int(n - 1);
        if (j >= i) ++j;
        BitMatrix m = BitMatrix::random(n, rng);
        BitMatrix am = mat_mul(elementary_add(n, i, j), m);
        CHECK(am.row(i) == m.row(i));
        CHECK(am.row(j) == (m.row(j) ^ m.row(i)));
        BitMatrix sm = mat_mul(elementary_swap(n, i, j), m);
        CHECK(sm.row(i) == m.row(j));
        CHECK(sm.row(j) == m.row(i));
    }
}
