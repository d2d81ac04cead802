#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cobga/gf2.hpp"
#include "cobga/problems.hpp"
#include "cobga/rng.hpp"

namespace cobga {

// Operator settings of the solution-space GA. A population_size or
// generations of 0 means "use the default at run time" (4n and the caller's
// budget respectively).
struct GAConfig {
    int population_size = 0;  // 0 -> 4 * chromosome length; must be even
    int generations = 0;
    int tournament_size = 3;
    double crossover_prob = 0.5;
    double per_gene_flip_prob = 0.05;
    double per_individual_mutation_prob = 0.2;
    bool early_stop_on_optimum = true;
};

int resolved_population_size(const GAConfig& cfg, int n);

// Throws std::invalid_argument on odd/too-small population or probabilities
// outside [0, 1].
void validate_config(const GAConfig& cfg, int n);

struct RunRecord {
    double best_fitness = 0.0;
    BitVector best_genotype;  // standard-basis coordinates
    int generations_executed = 0;
    // Entry 0 is the best of the initial population, then one entry per
    // executed generation.
    std::vector<double> best_per_generation;
    u64 seed = 0;
};

// Index of the best of `tsize` uniform draws with replacement; ties keep the
// earliest drawn maximum.
std::size_t tournament_select(const std::vector<double>& fitness, int tsize, Rng& rng);

// Cut point uniform in {1, .., n-1}; children swap suffixes.
std::pair<BitVector, BitVector> one_point_crossover(const BitVector& a, const BitVector& b,
                                                    Rng& rng);

// Independent per-gene flips with probability p.
BitVector flip_mutation(const BitVector& v, double p, Rng& rng);

// Full generational replacement: population_size tournament winners, paired
// consecutively; each pair crosses with crossover_prob (children become the
// candidates, otherwise the parents pass through); each candidate is then
// flip-mutated with per_individual_mutation_prob. Returns the new, not yet
// evaluated population.
std::vector<BitVector> next_generation(const std::vector<BitVector>& pop,
                                       const std::vector<double>& fitness, const GAConfig& cfg,
                                       Rng& rng);

std::vector<BitVector> random_population(int n, int count, Rng& rng);

// Generational GA with an optional change of basis. With a basis T the
// population is transformed once after initial evaluation, all genetic
// operators act in the transformed coordinates, and every offspring is
// evaluated through the inverse map: fitness(o') = problem.evaluate(T^-1 o').
// With basis == nullptr the transform is skipped and this is a plain GA.
//
// Randomness uses two derived streams: derive_seed(seed, 0) initializes the
// population and derive_seed(seed, 1) drives the evolution. An injected
// initial_population (standard coordinates; it is evaluated and then
// transformed like a drawn one) skips the init stream but shares the
// evolution stream, which keeps seeded runs comparable across bases.
RunRecord run_ga(const FitnessProblem& problem, const BitMatrix* basis, const GAConfig& cfg,
                 u64 seed, const std::vector<BitVector>* initial_population = nullptr);

}  // namespace cobga
