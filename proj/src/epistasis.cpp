#include "cobga/epistasis.hpp"

#include <stdexcept>

namespace cobga {

Sample sample_population(const FitnessProblem& problem, int size, Rng& rng) {
    if (size < 1) throw std::invalid_argument("sample_population: size must be >= 1");
    Sample s;
    s.n = problem.length();
    s.genotypes.reserve(static_cast<size_t>(size));
    s.fitness.reserve(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) {
        s.genotypes.push_back(BitVector::random(s.n, rng));
        s.fitness.push_back(problem.evaluate(s.genotypes.back()));
    }
    return s;
}

Sample enumerate_population(const FitnessProblem& problem) {
    int n = problem.length();
    if (n > 24) throw std::invalid_argument("enumerate_population: n > 24 is not enumerable");
    Sample s;
    s.n = n;
    u64 count = static_cast<u64>(1) << n;
    s.genotypes.reserve(count);
    s.fitness.reserve(count);
    for (u64 idx = 0; idx < count; ++idx) {
        s.genotypes.push_back(BitVector::from_index(n, idx));
        s.fitness.push_back(problem.evaluate(s.genotypes.back()));
    }
    return s;
}

EpistasisReport davidor_epistasis(const Sample& sample) {
    if (sample.size() == 0) throw std::invalid_argument("davidor_epistasis: empty sample");
    size_t s = sample.size();
    int n = sample.n;

    double mu = 0.0;
    for (double f : sample.fitness) mu += f;
    mu /= static_cast<double>(s);

    // A[i][a] accumulates fitness, C[i][a] counts carriers.
    std::vector<double> allele_sum(static_cast<size_t>(n) * 2, 0.0);
    std::vector<u64> allele_count(static_cast<size_t>(n) * 2, 0);
    for (size_t m = 0; m < s; ++m) {
        double f = sample.fitness[m];
        const BitVector& v = sample.genotypes[m];
        for (int i = 0; i < n; ++i) {
            size_t cell = static_cast<size_t>(i) * 2 + (v.get(i) ? 1 : 0);
            allele_sum[cell] += f;
            allele_count[cell] += 1;
        }
    }
    std::vector<double> excess(static_cast<size_t>(n) * 2, 0.0);  // E[i][a]
    for (size_t cell = 0; cell < excess.size(); ++cell)
        if (allele_count[cell] > 0)
            excess[cell] = allele_sum[cell] / static_cast<double>(allele_count[cell]) - mu;

    double acc = 0.0;
    for (size_t m = 0; m < s; ++m) {
        const BitVector& v = sample.genotypes[m];
        double genic = mu;
        for (int i = 0; i < n; ++i) genic += excess[static_cast<size_t>(i) * 2 + (v.get(i) ? 1 : 0)];
        double gap = sample.fitness[m] - genic;
        acc += gap * gap;
    }

    EpistasisReport rep;
    rep.value = acc / static_cast<double>(s);
    rep.mu = mu;
    rep.sample_size = static_cast<int>(s);
    return rep;
}

double evaluate_basis_epistasis(const BitMatrix& t, const Sample& sample) {
    if (t.dim() != sample.n)
        throw std::invalid_argument("evaluate_basis_epistasis: dimension mismatch");
    Sample transformed;
    transformed.n = sample.n;
    transformed.genotypes = change_basis(t, sample.genotypes);
    transformed.fitness = sample.fitness;
    return davidor_epistasis(transformed).value;
}

std::vector<double> evaluate_basis_meta(const BitMatrix& t, const FitnessProblem& problem,
                                        const GAConfig& ga_config, int k, int g, Rng& rng) {
    if (t.dim() != problem.length())
        throw std::invalid_argument("evaluate_basis_meta: dimension mismatch");
    if (k < 1) throw std::invalid_argument("evaluate_basis_meta: k must be >= 1");
    if (g < 0) throw std::invalid_argument("evaluate_basis_meta: g must be >= 0");
    GAConfig cfg = ga_config;
    cfg.generations = g;
    std::vector<double> best_fits;
    best_fits.reserve(static_cast<size_t>(k));
    for (int run = 0; run < k; ++run) {
        u64 run_seed = rng.next();
        best_fits.push_back(run_ga(problem, &t, cfg, run_seed).best_fitness);
    }
    return best_fits;
}

}  // namespace cobga
