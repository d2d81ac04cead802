#pragma once

#include <vector>

#include "cobga/ga.hpp"
#include "cobga/gf2.hpp"
#include "cobga/problems.hpp"

namespace cobga {

// Genotype/fitness pairs used by the epistasis estimator. Genotypes all share
// length n; duplicates are allowed (i.i.d. sampling keeps them).
struct Sample {
    int n = 0;
    std::vector<BitVector> genotypes;
    std::vector<double> fitness;
    size_t size() const { return genotypes.size(); }
};

struct EpistasisReport {
    double value = 0.0;  // mean squared gap between fitness and genic value
    double mu = 0.0;     // mean fitness of the sample
    int sample_size = 0;
};

// `size` genotypes drawn i.i.d. uniform over Z2^n, each paired with its
// fitness.
Sample sample_population(const FitnessProblem& problem, int size, Rng& rng);

// All 2^n genotypes in index order; used for the exact (non-sampled) tables.
Sample enumerate_population(const FitnessProblem& problem);

// Davidor's measure: with mu the mean fitness, A[i][a] the mean fitness of
// individuals carrying allele a at locus i, and E[i][a] = A[i][a] - mu, the
// genic value of an individual is G = mu + sum_i E[i][v_i] and the epistasis
// is the mean of (fitness - G)^2 over the sample. An allele never observed at
// a locus contributes E = 0. Throws on an empty sample.
EpistasisReport davidor_epistasis(const Sample& sample);

// Epistasis of the sample after the coordinate change: genotypes are mapped
// through t, fitnesses carried over unchanged.
double evaluate_basis_epistasis(const BitMatrix& t, const Sample& sample);

// Runs the change-of-basis GA k times for g generations each and returns the
// k best fitnesses in run order. Per-run seeds are drawn from rng up front,
// one per run index.
std::vector<double> evaluate_basis_meta(const BitMatrix& t, const FitnessProblem& problem,
                                        const GAConfig& ga_config, int k, int g, Rng& rng);

}  // namespace cobga
