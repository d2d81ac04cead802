#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cobga/gf2.hpp"
#include "cobga/word.hpp"

namespace cobga {

// A deterministic fitness function over fixed-length bit genotypes. evaluate
// is pure and const, so instances are safe to share across threads.
class FitnessProblem {
public:
    virtual ~FitnessProblem() = default;
    virtual int length() const = 0;
    virtual double evaluate(const BitVector& v) const = 0;
    // Known optimum fitness, when the problem family has one.
    virtual std::optional<double> optimum() const { return std::nullopt; }
};

// Number of one bits.
double onemax(const BitVector& v);

// Sum over i of (parity of v) XOR v_i: popcount when the overall parity is
// even, n - popcount when odd. Fully inter-dependent genes in the standard
// basis, yet affine after the right change of basis.
double parity_fitness(const BitVector& v);

class OnemaxProblem final : public FitnessProblem {
public:
    explicit OnemaxProblem(int n) : n_(n) {}
    int length() const override { return n_; }
    double evaluate(const BitVector& v) const override { return onemax(v); }
    std::optional<double> optimum() const override { return static_cast<double>(n_); }

private:
    int n_;
};

class ParityProblem final : public FitnessProblem {
public:
    explicit ParityProblem(int n) : n_(n) {}
    int length() const override { return n_; }
    double evaluate(const BitVector& v) const override { return parity_fitness(v); }
    std::optional<double> optimum() const override { return static_cast<double>(n_); }

private:
    int n_;
};

// Onemax composed with a hidden nonsingular coordinate change: fitness(v) =
// popcount(T v). The generating word is kept for provenance and for the
// zero-epistasis oracle (scoring T itself must give exactly onemax back).
struct VariantOnemaxInstance {
    int n = 0;
    BasisWord origin_word;
    BitMatrix t;
};

// T = word_to_matrix(random_word(n, 3n, n/2)).
VariantOnemaxInstance gen_variant_onemax(int n, Rng& rng);

double eval_variant_onemax(const VariantOnemaxInstance& inst, const BitVector& v);

class VariantOnemaxProblem final : public FitnessProblem {
public:
    explicit VariantOnemaxProblem(VariantOnemaxInstance inst) : inst_(std::move(inst)) {}
    int length() const override { return inst_.n; }
    double evaluate(const BitVector& v) const override { return eval_variant_onemax(inst_, v); }
    std::optional<double> optimum() const override { return static_cast<double>(inst_.n); }
    const VariantOnemaxInstance& instance() const { return inst_; }

private:
    VariantOnemaxInstance inst_;
};

// NK landscape: gene i contributes tables[i][idx], where idx packs the gene's
// own allele (most significant bit) followed by its K neighbours' alleles in
// ascending index order. Fitness is the mean contribution, so it lies in [0,1].
struct NkInstance {
    int n = 0;  // N
    int k = 0;  // K
    std::vector<std::vector<int>> neighbors;    // per gene, K sorted indices
    std::vector<std::vector<double>> tables;    // per gene, 2^(K+1) values in [0,1]
};

// neighbors[i] uniform without replacement from the other N-1 genes; table
// entries iid uniform on [0,1]. Throws unless 0 <= K < N.
NkInstance gen_nk(int n, int k, Rng& rng);

double eval_nk(const NkInstance& inst, const BitVector& v);

class NkProblem final : public FitnessProblem {
public:
    explicit NkProblem(NkInstance inst) : inst_(std::move(inst)) {}
    int length() const override { return inst_.n; }
    double evaluate(const BitVector& v) const override { return eval_nk(inst_, v); }
    const NkInstance& instance() const { return inst_; }

private:
    NkInstance inst_;
};

}  // namespace cobga
