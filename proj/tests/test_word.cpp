#include <doctest.h>

#include <map>

#include "cobga/word.hpp"
#include "test_helpers.hpp"

using namespace cobga;
using cobga::testing::add1;
using cobga::testing::arbitrary_word;
using cobga::testing::swap1;

namespace {

// Independent oracle: plain recursive edit distance with the same weights
// (insert 1, delete 1, replace 2), memoized, no DP-table sharing with the
// implementation under test.
int naive_distance(const BasisWord& a, const BasisWord& b, size_t i, size_t j,
                   std::map<std::pair<size_t, size_t>, int>& memo) {
    if (i == 0) return static_cast<int>(j);
    if (j == 0) return static_cast<int>(i);
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int best = naive_distance(a, b, i - 1, j, memo) + 1;
    best = std::min(best, naive_distance(a, b, i, j - 1, memo) + 1);
    int sub = a.ops[i - 1] == b.ops[j - 1] ? 0 : 2;
    best = std::min(best, naive_distance(a, b, i - 1, j - 1, memo) + sub);
    memo[key] = best;
    return best;
}

int naive_distance(const BasisWord& a, const BasisWord& b) {
    std::map<std::pair<size_t, size_t>, int> memo;
    return naive_distance(a, b, a.ops.size(), b.ops.size(), memo);
}

}  // namespace

TEST_CASE("word_to_matrix basics") {
    BasisWord empty{4, {}};
    CHECK(word_to_matrix(empty) == BitMatrix::identity(4));

    BasisWord single{3, {add1(1, 2)}};
    CHECK(word_to_matrix(single) == elementary_add(3, 0, 1));

    // S12 A21 A12 collapses to the single add A21.
    BasisWord p1{4, {swap1(1, 2), add1(2, 1), add1(1, 2)}};
    CHECK(word_to_matrix(p1) == elementary_add(4, 1, 0));
}

TEST_CASE("word_to_matrix is a monoid morphism") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng.below_int(8);
        BasisWord u = arbitrary_word(n, rng.below_int(9), rng);
        BasisWord v = arbitrary_word(n, rng.below_int(9), rng);
        BasisWord uv{n, u.ops};
        uv.ops.insert(uv.ops.end(), v.ops.begin(), v.ops.end());
        CHECK(word_to_matrix(uv) == mat_mul(word_to_matrix(u), word_to_matrix(v)));
    }
}

TEST_CASE("random_word determinism and nonsingularity") {
    Rng a(99), b(99);
    CHECK(random_word(10, 30, 10, a) == random_word(10, 30, 10, b));

    Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        BasisWord w = random_word(6, 18, 6, rng);
        CHECK(w.ops.size() >= 1);
        CHECK(is_nonsingular(word_to_matrix(w)));
    }
}

TEST_CASE("random_word length statistics") {
    Rng rng(2024);
    double total = 0.0;
    const int draws = 10000;
    for (int trial = 0; trial < draws; ++trial)
        total += static_cast<double>(random_word(20, 60, 20, rng).ops.size());
    double mean = total / draws;
    CHECK(mean > 58.0);
    CHECK(mean < 62.0);
}

TEST_CASE("random_word op uniformity over kinds and pairs") {
    Rng rng(55);
    int n = 5;
    std::vector<int> pair_counts(static_cast<size_t>(n * n), 0);
    int swaps = 0;
    const int draws = 40000;
    for (int trial = 0; trial < draws; ++trial) {
        ElementaryOp op = random_op(n, rng);
        CHECK(op.i != op.j);
        if (op.kind == OpKind::Swap) ++swaps;
        ++pair_counts[static_cast<size_t>(op.i * n + op.j)];
    }
    CHECK(std::abs(swaps / static_cast<double>(draws) - 0.5) < 0.02);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                double freq = pair_counts[static_cast<size_t>(i * n + j)] / static_cast<double>(draws);
                CHECK(std::abs(freq - 1.0 / (n * (n - 1))) < 0.01);
            }
}

TEST_CASE("edit distance of the worked parent pair is 3") {
    BasisWord p1{4, {swap1(1, 2), add1(2, 1), add1(1, 2)}};
    BasisWord p2{4, {add1(2, 1), swap1(1, 2)}};
    CHECK(edit_distance(p1, p2) == 3);

    // The displayed alignment (P1 over gaps, P2 with the leading gaps) also
    // costs exactly the distance.
    Alignment display;
    display.a = {swap1(1, 2), add1(2, 1), add1(1, 2), std::nullopt};
    display.b = {std::nullopt, std::nullopt, add1(1, 2), swap1(1, 2)};
    CHECK(alignment_cost(display) == 3);
}

TEST_CASE("edit distance trivial cases") {
    Rng rng(8);
    BasisWord w = arbitrary_word(5, 7, rng);
    CHECK(edit_distance(w, w) == 0);
    BasisWord empty{5, {}};
    CHECK(edit_distance(empty, w) == static_cast<int>(w.ops.size()));
    CHECK(edit_distance(w, empty) == static_cast<int>(w.ops.size()));
}

TEST_CASE("edit distance agrees with the recursive oracle") {
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng.below_int(4);
        BasisWord a = arbitrary_word(n, rng.below_int(8), rng);
        BasisWord b = arbitrary_word(n, rng.below_int(8), rng);
        CHECK(edit_distance(a, b) == naive_distance(a, b));
    }
}

TEST_CASE("edit distance is a metric") {
    Rng rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng.below_int(3);
        BasisWord a = arbitrary_word(n, rng.below_int(7), rng);
        BasisWord b = arbitrary_word(n, rng.below_int(7), rng);
        BasisWord c = arbitrary_word(n, rng.below_int(7), rng);
        int dab = edit_distance(a, b);
        CHECK(dab >= 0);
        CHECK(dab == edit_distance(b, a));
        CHECK((dab == 0) == (a.ops == b.ops));
        CHECK(dab <= edit_distance(a, c) + edit_distance(c, b));
    }
}

TEST_CASE("align invariants") {
    Rng rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + rng.below_int(5);
        BasisWord a = arbitrary_word(n, rng.below_int(10), rng);
        BasisWord b = arbitrary_word(n, rng.below_int(10), rng);
        Alignment al = align(a, b);
        CHECK(al.a.size() == al.b.size());
        CHECK(al.a.size() <= a.ops.size() + b.ops.size());
        CHECK(alignment_cost(al) == edit_distance(a, b));
        size_t count_a = 0, count_b = 0;
        for (size_t k = 0; k < al.a.size(); ++k) {
            CHECK((al.a[k].has_value() || al.b[k].has_value()));  // no gap/gap column
            if (al.a[k]) {
                CHECK(*al.a[k] == a.ops[count_a]);
                ++count_a;
            }
            if (al.b[k]) {
                CHECK(*al.b[k] == b.ops[count_b]);
                ++count_b;
            }
        }
        CHECK(count_a == a.ops.size());
        CHECK(count_b == b.ops.size());
    }

    BasisWord w = arbitrary_word(4, 6, rng);
    Alignment self = align(w, w);
    CHECK(self.a.size() == w.ops.size());
    for (size_t k = 0; k < self.a.size(); ++k) {
        CHECK(self.a[k].has_value());
        CHECK(self.b[k].has_value());
    }
}

TEST_CASE("crossover of identical parents returns them") {
    Rng rng(12);
    BasisWord w = arbitrary_word(5, 8, rng);
    auto [c1, c2] = crossover(w, w, rng);
    CHECK(c1 == w);
    CHECK(c2 == w);
}

TEST_CASE("crossover offspring draw symbols from the parents") {
    Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng.below_int(5);
        BasisWord a = arbitrary_word(n, rng.below_int(9), rng);
        BasisWord b = arbitrary_word(n, rng.below_int(9), rng);
        auto [c1, c2] = crossover(a, b, rng);
        // Multiset union of offspring symbols equals multiset union of parents.
        auto key = [](const ElementaryOp& op) {
            return std::tuple<int, int, int>(static_cast<int>(op.kind), op.i, op.j);
        };
        std::map<std::tuple<int, int, int>, int> balance;
        for (const auto& op : a.ops) ++balance[key(op)];
        for (const auto& op : b.ops) ++balance[key(op)];
        for (const auto& op : c1.ops) --balance[key(op)];
        for (const auto& op : c2.ops) --balance[key(op)];
        for (const auto& [k, v] : balance) CHECK(v == 0);
        CHECK(is_nonsingular(word_to_matrix(c1)));
        CHECK(is_nonsingular(word_to_matrix(c2)));

        // Homologous geometry: every offspring sits on a geodesic between its
        // parents (the per-column accounting bounds the sum from above and
        // the triangle inequality from below), and its length stays within
        // the alignment's fully-matched and total column counts.
        Alignment al = align(a, b);
        size_t hi = al.a.size();
        size_t full = 0;
        for (size_t k = 0; k < hi; ++k)
            if (al.a[k] && al.b[k]) ++full;
        for (const BasisWord* child : {&c1, &c2}) {
            CHECK(child->ops.size() >= full);
            CHECK(child->ops.size() <= hi);
            CHECK(edit_distance(a, *child) + edit_distance(*child, b) == edit_distance(a, b));
        }
    }
}

TEST_CASE("crossover with an all-heads mask reproduces the parents") {
    // Identical parents make every aligned column (x, x), so whatever the
    // coin says, offspring 1 collects a's symbols in order.
    Rng rng(14);
    BasisWord a = arbitrary_word(4, 5, rng);
    auto [c1, c2] = crossover(a, a, rng);
    CHECK(c1 == a);
    CHECK(c2 == a);
}

TEST_CASE("mutate leaves the word alone when no event fires") {
    Rng rng(15);
    BasisWord w = arbitrary_word(6, 10, rng);
    auto [m, events] = mutate_counted(w, 0.0, rng);
    CHECK(events == 0);
    CHECK(m == w);
}

TEST_CASE("mutate event rate matches the per-symbol probability") {
    Rng rng(16);
    BasisWord w = arbitrary_word(8, 40, rng);
    const int trials = 20000;
    long total = 0;
    for (int t = 0; t < trials; ++t) total += mutate_counted(w, 0.05, rng).second;
    // 40 symbol slots plus the trailing insert slot.
    double expected = 0.05 * 41.0;
    double got = total / static_cast<double>(trials);
    CHECK(std::abs(got - expected) < 0.05);
}

TEST_CASE("mutated words stay nonsingular and can grow from empty") {
    Rng rng(17);
    BasisWord w{5, {}};
    bool grew = false;
    for (int t = 0; t < 400; ++t) {
        w = mutate(w, 0.05, rng);
        CHECK(is_nonsingular(word_to_matrix(w)));
        if (!w.ops.empty()) grew = true;
    }
    CHECK(grew);
}
