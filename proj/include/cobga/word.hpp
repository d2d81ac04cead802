#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cobga/gf2.hpp"
#include "cobga/rng.hpp"

namespace cobga {

enum class OpKind : std::uint8_t { Swap, Add };

// One elementary row operation on an n-dimensional space. Rows are 0-based.
// Swap exchanges rows i and j; Add adds row i into row j (the matrix is the
// identity plus a 1 at entry (j, i)).
struct ElementaryOp {
    OpKind kind;
    int i;
    int j;
    bool operator==(const ElementaryOp&) const = default;
};

// Variable-length genome for a nonsingular matrix: the word [op1, ..., opL]
// denotes the matrix product M(op1) * M(op2) * ... * M(opL). The empty word
// denotes the identity. Products of elementary matrices are closed under
// crossover and mutation, so every individual stays invertible with no repair.
struct BasisWord {
    int n = 0;
    std::vector<ElementaryOp> ops;
    bool operator==(const BasisWord&) const = default;
};

BitMatrix op_matrix(const ElementaryOp& op, int n);

// m := M(op) * m, realized as a row operation (one row XOR or swap).
void apply_op_left(BitMatrix& m, const ElementaryOp& op);

// Left-to-right product of the word's operation matrices. Always nonsingular.
BitMatrix word_to_matrix(const BasisWord& w);

// Uniform over {Swap, Add} x ordered pairs (i, j), i != j: fair coin for the
// kind, then one of the n(n-1) ordered pairs.
ElementaryOp random_op(int n, Rng& rng);

// Length drawn from round(Normal(mean_len, std_len)) and clamped to >= 1,
// ops drawn by random_op. For n == 1 no elementary operation exists and the
// empty word (identity) is returned.
BasisWord random_word(int n, double mean_len, double std_len, Rng& rng);

// Weighted edit distance between op sequences: insertion 1, deletion 1,
// replacement 2. Symbols compare equal iff kind, i and j all match.
int edit_distance(const BasisWord& a, const BasisWord& b);

// One aligned column holds an op or a gap (nullopt); no column is gap/gap.
using AlignedOp = std::optional<ElementaryOp>;

struct Alignment {
    std::vector<AlignedOp> a;
    std::vector<AlignedOp> b;  // same length as a
};

// Optimal alignment from the Wagner-Fischer table. Traceback ties are broken
// in the fixed order delete > insert > diagonal, so alignments are
// deterministic. Its cost always equals edit_distance(a, b).
Alignment align(const BasisWord& a, const BasisWord& b);

// Cost of an alignment under the same weights (gap column 1, mismatch 2).
int alignment_cost(const Alignment& al);

// Homologous geometric crossover: align the parents, then per column each
// offspring takes one parent's symbol and the other offspring the complement;
// gaps are dropped when the columns are reassembled into words.
std::pair<BasisWord, BasisWord> crossover(const BasisWord& a, const BasisWord& b, Rng& rng);

// Per symbol, with probability p, one of insert-before / delete / replace is
// applied (chosen uniformly). One extra insert-only slot after the last
// symbol lets the empty word grow. Also reports the number of edit events.
std::pair<BasisWord, int> mutate_counted(const BasisWord& w, double p, Rng& rng);
BasisWord mutate(const BasisWord& w, double p, Rng& rng);

}  // namespace cobga
