#pragma once

#include <vector>

#include "cobga/epistasis.hpp"
#include "cobga/ga.hpp"
#include "cobga/rewrite.hpp"
#include "cobga/word.hpp"

namespace cobga {

enum class BasisEvaluatorKind { Epistasis, Meta };

// How the k meta best-fitnesses collapse to one score.
enum class MetaAggregate { Mean, Min, Median };

struct BasisSearchConfig {
    int population_size = 0;  // 0 -> 4n
    int generations = 0;      // 0 -> n
    BasisEvaluatorKind evaluator = BasisEvaluatorKind::Epistasis;
    int sample_size = 0;  // epistasis mode; 0 -> n^2
    int meta_k = 5;
    int meta_g = 0;  // 0 -> n
    MetaAggregate meta_aggregate = MetaAggregate::Mean;
    GAConfig meta_ga;  // inner GA settings for the meta evaluator
    double init_mean = 0.0;  // 0 -> 3n
    double init_std = 0.0;   // 0 -> n
    double crossover_prob = 0.5;
    double per_individual_mutation_prob = 0.2;
    double per_symbol_op_prob = 0.05;
    int tournament_size = 3;
    bool rewrite_pass = false;  // greedy word simplification before crossover
    int workers = 1;            // threads for candidate scoring
};

struct BasisCandidate {
    BasisWord word;
    BitMatrix matrix;  // cached word_to_matrix(word)
    double score = 0.0;
};

// Scoring context for one search. Scores are signed so that lower is always
// fitter: epistasis mode returns the Davidor value on the fixed sample; meta
// mode returns minus the aggregated best fitnesses. Epistasis-mode scoring is
// deterministic (stream_seed unused); meta mode derives its inner GA seeds
// from stream_seed only, so scoring is reproducible per candidate slot.
class BasisScorer {
public:
    static BasisScorer epistasis(Sample sample);
    static BasisScorer meta(const FitnessProblem& problem, GAConfig inner, int k, int g,
                            MetaAggregate aggregate);

    double score(const BitMatrix& t, u64 stream_seed) const;
    BasisEvaluatorKind kind() const { return kind_; }
    const Sample& sample() const { return sample_; }

private:
    BasisScorer() = default;
    BasisEvaluatorKind kind_ = BasisEvaluatorKind::Epistasis;
    Sample sample_;
    const FitnessProblem* problem_ = nullptr;
    GAConfig inner_{};
    int k_ = 5;
    int g_ = 0;
    MetaAggregate aggregate_ = MetaAggregate::Mean;
};

double score_candidate(const BasisCandidate& candidate, const BasisScorer& scorer, u64 stream_seed);

struct BasisSearchResult {
    BasisCandidate best;     // best candidate ever seen (lowest signed score)
    double identity_score;   // score of the empty word in generation 0
    int generations_executed = 0;
};

// GA over elementary words. Generation 0 holds one empty word (so the result
// can never be worse than no change of basis) plus random words of length
// Normal(3n, n). Selection, pairing, crossover/mutation probabilities and the
// full generational replacement mirror the solution-space GA, with the word
// alignment crossover and the per-symbol edit mutation as operators. In
// epistasis mode the evaluation sample is drawn once per search and reused
// for every scoring call.
//
// Seed streams: derive_seed(seed, 0) draws the sample, derive_seed(seed, 1)
// drives evolution, and candidate scoring in generation g at slot c uses
// derive_seed(seed, 2 + g, c), so scores are independent of scheduling order.
BasisSearchResult search_basis(const FitnessProblem& problem, const BasisSearchConfig& cfg,
                               u64 seed);

}  // namespace cobga
