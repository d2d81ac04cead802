#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobga/word.hpp"

namespace cobga {

// Op pattern over index variables (0, 1, 2 stand for i, j, k). A rule side is
// a sequence of these; instantiating a side binds each variable to a concrete
// row index, all pairwise distinct.
struct PatternOp {
    OpKind kind;
    int vi;
    int vj;
};

// A two-sided rewrite over elementary words. Every rule preserves the word's
// matrix, i.e. word_to_matrix(before) == word_to_matrix(after), and both
// sides use the same variable set, so either side can act as the pattern.
struct RewriteRule {
    std::string name;
    int num_vars;  // 2 or 3 distinct row indices
    std::vector<PatternOp> lhs;
    std::vector<PatternOp> rhs;
};

// The ten-rule catalog: five exchange rules, two compaction rules, and the
// three swap/add identities. Fixed order, stable names.
const std::vector<RewriteRule>& rewrite_rules();

// Instantiates one side of a rule with concrete indices (idx[v] for variable v).
std::vector<ElementaryOp> instantiate(const std::vector<PatternOp>& side, const int idx[3]);

// Tries to match the rule's pattern side (lhs, or rhs when reverse) at `pos`
// in w, unifying index variables; on success returns w with the matched span
// replaced by the instantiated other side. Returns nullopt on mismatch.
std::optional<BasisWord> apply_rule(const BasisWord& w, const RewriteRule& rule, std::size_t pos,
                                    bool reverse = false);

// Greedy shortening pass: repeatedly cancels adjacent involutive pairs
// (X X = I for swaps and adds, and S(i,j) S(j,i) = I) and applies any
// length-reducing catalog rule, up to max_steps rewrites (default 2|w|).
// The denoted matrix is invariant.
BasisWord simplify(const BasisWord& w, int max_steps = -1);

}  // namespace cobga
