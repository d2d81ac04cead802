#include "cobga/rewrite.hpp"

#include <stdexcept>

namespace cobga {

namespace {

constexpr int I = 0, J = 1, K = 2;

PatternOp S(int a, int b) { return {OpKind::Swap, a, b}; }
PatternOp A(int a, int b) { return {OpKind::Add, a, b}; }

std::vector<RewriteRule> build_rules() {
    std::vector<RewriteRule> rules;
    // Exchange rules. Two adds commute when they share a target row or share
    // a source row; a swap conjugates an add by renaming the swapped row.
    rules.push_back({"exchange-add-same-target", 3, {A(I, K), A(J, K)}, {A(J, K), A(I, K)}});
    rules.push_back({"exchange-add-same-source", 3, {A(I, J), A(I, K)}, {A(I, K), A(I, J)}});
    rules.push_back({"exchange-swap-renames-source", 3, {S(I, J), A(I, K)}, {A(J, K), S(I, J)}});
    rules.push_back({"exchange-swap-renames-target", 3, {S(I, J), A(K, I)}, {A(K, J), S(I, J)}});
    rules.push_back({"exchange-swap-chain", 3, {S(I, J), S(J, K)}, {S(J, K), S(I, K)}});
    // Compaction rules: a three-op pattern collapses to two ops.
    rules.push_back({"compact-fan-in", 3, {A(I, K), A(J, K), A(I, J)}, {A(I, J), A(J, K)}});
    rules.push_back({"compact-fan-out", 3, {A(K, J), A(K, I), A(J, I)}, {A(J, I), A(K, J)}});
    // Swap/add identities on a single row pair.
    rules.push_back({"swap-absorb", 2, {A(I, J), S(I, J)}, {A(J, I), A(I, J)}});
    rules.push_back({"swap-expand", 2, {S(I, J)}, {A(I, J), A(J, I), A(I, J)}});
    rules.push_back(
        {"add-pair-square", 2, {A(I, J), A(J, I), A(I, J), A(J, I)}, {A(J, I), A(I, J)}});
    return rules;
}

bool is_inverse_pair(const ElementaryOp& a, const ElementaryOp& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == OpKind::Add) return a.i == b.i && a.j == b.j;  // adds are self-inverse
    // Swaps are involutions and symmetric in their indices.
    return (a.i == b.i && a.j == b.j) || (a.i == b.j && a.j == b.i);
}

}  // namespace

const std::vector<RewriteRule>& rewrite_rules() {
    static const std::vector<RewriteRule> rules = build_rules();
    return rules;
}

std::vector<ElementaryOp> instantiate(const std::vector<PatternOp>& side, const int idx[3]) {
    std::vector<ElementaryOp> ops;
    ops.reserve(side.size());
    for (const PatternOp& p : side) ops.push_back({p.kind, idx[p.vi], idx[p.vj]});
    return ops;
}

std::optional<BasisWord> apply_rule(const BasisWord& w, const RewriteRule& rule, std::size_t pos,
                                    bool reverse) {
    const auto& pattern = reverse ? rule.rhs : rule.lhs;
    const auto& replacement = reverse ? rule.lhs : rule.rhs;
    if (pos + pattern.size() > w.ops.size()) return std::nullopt;

    int bind[3] = {-1, -1, -1};
    auto unify = [&](int var, int value) {
        if (bind[var] == -1) {
            // Distinctness: a variable may not take an index already bound.
            for (int v = 0; v < 3; ++v)
                if (bind[v] == value) return false;
            bind[var] = value;
            return true;
        }
        return bind[var] == value;
    };
    for (size_t k = 0; k < pattern.size(); ++k) {
        const ElementaryOp& op = w.ops[pos + k];
        const PatternOp& p = pattern[k];
        if (op.kind != p.kind) return std::nullopt;
        if (!unify(p.vi, op.i) || !unify(p.vj, op.j)) return std::nullopt;
    }

    BasisWord out{w.n, {}};
    out.ops.reserve(w.ops.size() - pattern.size() + replacement.size());
    out.ops.insert(out.ops.end(), w.ops.begin(), w.ops.begin() + static_cast<long>(pos));
    auto inst = instantiate(replacement, bind);
    out.ops.insert(out.ops.end(), inst.begin(), inst.end());
    out.ops.insert(out.ops.end(), w.ops.begin() + static_cast<long>(pos + pattern.size()),
                   w.ops.end());
    return out;
}

BasisWord simplify(const BasisWord& w, int max_steps) {
    if (max_steps < 0) max_steps = 2 * static_cast<int>(w.ops.size());
    BasisWord cur = w;
    for (int step = 0; step < max_steps; ++step) {
        bool changed = false;
        for (size_t p = 0; p + 1 < cur.ops.size(); ++p) {
            if (is_inverse_pair(cur.ops[p], cur.ops[p + 1])) {
                cur.ops.erase(cur.ops.begin() + static_cast<long>(p),
                              cur.ops.begin() + static_cast<long>(p) + 2);
                changed = true;
                break;
            }
        }
        if (!changed) {
            for (const RewriteRule& rule : rewrite_rules()) {
                for (int rev = 0; rev < 2 && !changed; ++rev) {
                    const auto& pat = rev ? rule.rhs : rule.lhs;
                    const auto& rep = rev ? rule.lhs : rule.rhs;
                    if (rep.size() >= pat.size()) continue;  // only shortening moves
                    for (size_t p = 0; p + pat.size() <= cur.ops.size(); ++p) {
                        if (auto next = apply_rule(cur, rule, p, rev != 0)) {
                            cur = std::move(*next);
                            changed = true;
                            break;
                        }
                    }
                }
                if (changed) break;
            }
        }
        if (!changed) break;
    }
    return cur;
}

}  // namespace cobga
