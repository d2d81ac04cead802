#include "cobga/ga.hpp"

#include <stdexcept>

namespace cobga {

int resolved_population_size(const GAConfig& cfg, int n) {
    return cfg.population_size > 0 ? cfg.population_size : 4 * n;
}

void validate_config(const GAConfig& cfg, int n) {
    int pop = resolved_population_size(cfg, n);
    if (pop < 2 || pop % 2 != 0)
        throw std::invalid_argument("GAConfig: population size must be even and >= 2");
    if (cfg.generations < 0) throw std::invalid_argument("GAConfig: negative generation budget");
    if (cfg.tournament_size < 1) throw std::invalid_argument("GAConfig: tournament size must be >= 1");
    for (double p : {cfg.crossover_prob, cfg.per_gene_flip_prob, cfg.per_individual_mutation_prob})
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("GAConfig: probability outside [0, 1]");
}

std::size_t tournament_select(const std::vector<double>& fitness, int tsize, Rng& rng) {
    if (fitness.empty()) throw std::invalid_argument("tournament_select: empty population");
    std::size_t best = rng.below(fitness.size());
    for (int t = 1; t < tsize; ++t) {
        std::size_t c = rng.below(fitness.size());
        if (fitness[c] > fitness[best]) best = c;
    }
    return best;
}

std::pair<BitVector, BitVector> one_point_crossover(const BitVector& a, const BitVector& b,
                                                    Rng& rng) {
    int n = a.size();
    if (n != b.size()) throw std::invalid_argument("one_point_crossover: length mismatch");
    if (n < 2) throw std::invalid_argument("one_point_crossover: length must be >= 2");
    int cut = 1 + rng.below_int(n - 1);
    BitVector c1 = a, c2 = b;
    for (int i = cut; i < n; ++i) {
        bool bit_a = a.get(i), bit_b = b.get(i);
        c1.set(i, bit_b);
        c2.set(i, bit_a);
    }
    return {std::move(c1), std::move(c2)};
}

BitVector flip_mutation(const BitVector& v, double p, Rng& rng) {
    BitVector out = v;
    for (int i = 0; i < v.size(); ++i)
        if (rng.chance(p)) out.flip(i);
    return out;
}

std::vector<BitVector> next_generation(const std::vector<BitVector>& pop,
                                       const std::vector<double>& fitness, const GAConfig& cfg,
                                       Rng& rng) {
    size_t psize = pop.size();
    std::vector<BitVector> next;
    next.reserve(psize);
    for (size_t pair = 0; pair < psize / 2; ++pair) {
        const BitVector& pa = pop[tournament_select(fitness, cfg.tournament_size, rng)];
        const BitVector& pb = pop[tournament_select(fitness, cfg.tournament_size, rng)];
        if (rng.chance(cfg.crossover_prob)) {
            auto [c1, c2] = one_point_crossover(pa, pb, rng);
            next.push_back(std::move(c1));
            next.push_back(std::move(c2));
        } else {
            next.push_back(pa);
            next.push_back(pb);
        }
    }
    for (auto& candidate : next)
        if (rng.chance(cfg.per_individual_mutation_prob))
            candidate = flip_mutation(candidate, cfg.per_gene_flip_prob, rng);
    return next;
}

std::vector<BitVector> random_population(int n, int count, Rng& rng) {
    std::vector<BitVector> pop;
    pop.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) pop.push_back(BitVector::random(n, rng));
    return pop;
}

RunRecord run_ga(const FitnessProblem& problem, const BitMatrix* basis, const GAConfig& cfg,
                 u64 seed, const std::vector<BitVector>* initial_population) {
    int n = problem.length();
    validate_config(cfg, n);
    int pop_size = resolved_population_size(cfg, n);

    std::optional<BitMatrix> t_inv;
    if (basis != nullptr) {
        if (basis->dim() != n) throw std::invalid_argument("run_ga: basis dimension mismatch");
        auto inv = inverse(*basis);
        if (!inv) throw std::invalid_argument("run_ga: basis matrix is singular");
        t_inv = std::move(*inv);
    }

    RunRecord rec;
    rec.seed = seed;

    // Initialize in standard coordinates, evaluate, then transform; from here
    // on `pop` lives in the working (possibly transformed) coordinates.
    std::vector<BitVector> pop;
    if (initial_population != nullptr) {
        if (static_cast<int>(initial_population->size()) != pop_size)
            throw std::invalid_argument("run_ga: initial population size mismatch");
        pop = *initial_population;
    } else {
        Rng init_rng(derive_seed(seed, 0));
        pop = random_population(n, pop_size, init_rng);
    }
    std::vector<double> fits(static_cast<size_t>(pop_size));
    for (size_t i = 0; i < pop.size(); ++i) fits[i] = problem.evaluate(pop[i]);
    if (basis) pop = change_basis(*basis, pop);

    auto standard_coords = [&](const BitVector& v) {
        return basis ? mat_vec_mul(*t_inv, v) : v;
    };

    size_t best_idx = 0;
    for (size_t i = 1; i < fits.size(); ++i)
        if (fits[i] > fits[best_idx]) best_idx = i;
    rec.best_fitness = fits[best_idx];
    rec.best_genotype = standard_coords(pop[best_idx]);
    rec.best_per_generation.push_back(rec.best_fitness);

    auto at_optimum = [&]() {
        auto opt = problem.optimum();
        return cfg.early_stop_on_optimum && opt && rec.best_fitness >= *opt;
    };

    Rng rng(derive_seed(seed, 1));
    for (int gen = 0; gen < cfg.generations && !at_optimum(); ++gen) {
        pop = next_generation(pop, fits, cfg, rng);
        for (size_t i = 0; i < pop.size(); ++i)
            fits[i] = problem.evaluate(basis ? mat_vec_mul(*t_inv, pop[i]) : pop[i]);
        ++rec.generations_executed;

        size_t gen_best = 0;
        for (size_t i = 1; i < fits.size(); ++i)
            if (fits[i] > fits[gen_best]) gen_best = i;
        rec.best_per_generation.push_back(fits[gen_best]);
        if (fits[gen_best] > rec.best_fitness) {
            rec.best_fitness = fits[gen_best];
            rec.best_genotype = standard_coords(pop[gen_best]);
        }
    }
    return rec;
}

}  // namespace cobga
