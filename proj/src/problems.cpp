#include "cobga/problems.hpp"

#include <algorithm>
#include <stdexcept>

namespace cobga {

double onemax(const BitVector& v) { return static_cast<double>(v.popcount()); }

double parity_fitness(const BitVector& v) {
    int k = v.popcount();
    bool odd = (k & 1) != 0;
    return static_cast<double>(odd ? v.size() - k : k);
}

VariantOnemaxInstance gen_variant_onemax(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("gen_variant_onemax: n must be >= 1");
    VariantOnemaxInstance inst;
    inst.n = n;
    inst.origin_word = random_word(n, 3.0 * n, n / 2.0, rng);
    inst.t = word_to_matrix(inst.origin_word);
    return inst;
}

double eval_variant_onemax(const VariantOnemaxInstance& inst, const BitVector& v) {
    if (v.size() != inst.n) throw std::invalid_argument("eval_variant_onemax: dimension mismatch");
    return static_cast<double>(mat_vec_mul(inst.t, v).popcount());
}

NkInstance gen_nk(int n, int k, Rng& rng) {
    if (n < 1) throw std::invalid_argument("gen_nk: N must be >= 1");
    if (k < 0 || k >= n) throw std::invalid_argument("gen_nk: need 0 <= K < N");
    NkInstance inst;
    inst.n = n;
    inst.k = k;
    inst.neighbors.resize(static_cast<size_t>(n));
    inst.tables.resize(static_cast<size_t>(n));
    std::vector<int> others(static_cast<size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        others.clear();
        for (int g = 0; g < n; ++g)
            if (g != i) others.push_back(g);
        // Partial Fisher-Yates: the first k entries are a uniform k-subset.
        for (int d = 0; d < k; ++d) {
            int pick = d + rng.below_int(static_cast<int>(others.size()) - d);
            std::swap(others[static_cast<size_t>(d)], others[static_cast<size_t>(pick)]);
        }
        auto& nb = inst.neighbors[static_cast<size_t>(i)];
        nb.assign(others.begin(), others.begin() + k);
        std::sort(nb.begin(), nb.end());
        auto& table = inst.tables[static_cast<size_t>(i)];
        table.resize(static_cast<size_t>(1) << (k + 1));
        for (auto& cell : table) cell = rng.unit();
    }
    return inst;
}

double eval_nk(const NkInstance& inst, const BitVector& v) {
    if (v.size() != inst.n) throw std::invalid_argument("eval_nk: dimension mismatch");
    double total = 0.0;
    for (int i = 0; i < inst.n; ++i) {
        size_t idx = v.get(i) ? 1 : 0;
        for (int nb : inst.neighbors[static_cast<size_t>(i)]) idx = (idx << 1) | (v.get(nb) ? 1 : 0);
        total += inst.tables[static_cast<size_t>(i)][idx];
    }
    return total / inst.n;
}

}  // namespace cobga
