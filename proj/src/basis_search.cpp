#include "cobga/basis_search.hpp"

#include "cobga/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace cobga {

BasisScorer BasisScorer::epistasis(Sample sample) {
    BasisScorer s;
    s.kind_ = BasisEvaluatorKind::Epistasis;
    s.sample_ = std::move(sample);
    return s;
}

BasisScorer BasisScorer::meta(const FitnessProblem& problem, GAConfig inner, int k, int g,
                              MetaAggregate aggregate) {
    BasisScorer s;
    s.kind_ = BasisEvaluatorKind::Meta;
    s.problem_ = &problem;
    s.inner_ = inner;
    s.k_ = k;
    s.g_ = g;
    s.aggregate_ = aggregate;
    return s;
}

double BasisScorer::score(const BitMatrix& t, u64 stream_seed) const {
    if (kind_ == BasisEvaluatorKind::Epistasis) return evaluate_basis_epistasis(t, sample_);
    Rng rng(stream_seed);
    std::vector<double> fits = evaluate_basis_meta(t, *problem_, inner_, k_, g_, rng);
    std::sort(fits.begin(), fits.end());
    double agg = 0.0;
    switch (aggregate_) {
        case MetaAggregate::Mean: {
            for (double f : fits) agg += f;
            agg /= static_cast<double>(fits.size());
            break;
        }
        case MetaAggregate::Min:
            agg = fits.front();
            break;
        case MetaAggregate::Median: {
            size_t m = fits.size();
            agg = (m % 2 == 1) ? fits[m / 2] : 0.5 * (fits[m / 2 - 1] + fits[m / 2]);
            break;
        }
    }
    return -agg;  // internal convention: minimize
}

double score_candidate(const BasisCandidate& candidate, const BasisScorer& scorer,
                       u64 stream_seed) {
    return scorer.score(candidate.matrix, stream_seed);
}

namespace {

// Word-space tournament on signed scores; lowest wins, ties keep the earliest
// drawn minimum.
size_t tournament_min(const std::vector<double>& scores, int tsize, Rng& rng) {
    size_t best = rng.below(scores.size());
    for (int t = 1; t < tsize; ++t) {
        size_t c = rng.below(scores.size());
        if (scores[c] < scores[best]) best = c;
    }
    return best;
}

}  // namespace

BasisSearchResult search_basis(const FitnessProblem& problem, const BasisSearchConfig& cfg,
                               u64 seed) {
    int n = problem.length();
    int pop_size = cfg.population_size > 0 ? cfg.population_size : 4 * n;
    int generations = cfg.generations > 0 ? cfg.generations : n;
    if (pop_size < 2 || pop_size % 2 != 0)
        throw std::invalid_argument("search_basis: population size must be even and >= 2");
    double init_mean = cfg.init_mean > 0 ? cfg.init_mean : 3.0 * n;
    double init_std = cfg.init_std > 0 ? cfg.init_std : static_cast<double>(n);

    BasisScorer scorer = [&] {
        if (cfg.evaluator == BasisEvaluatorKind::Epistasis) {
            int sample_size = cfg.sample_size > 0 ? cfg.sample_size : n * n;
            Rng sample_rng(derive_seed(seed, 0));
            return BasisScorer::epistasis(sample_population(problem, sample_size, sample_rng));
        }
        int g = cfg.meta_g > 0 ? cfg.meta_g : n;
        return BasisScorer::meta(problem, cfg.meta_ga, cfg.meta_k, g, cfg.meta_aggregate);
    }();

    Rng rng(derive_seed(seed, 1));

    std::vector<BasisCandidate> pop(static_cast<size_t>(pop_size));
    pop[0].word = BasisWord{n, {}};  // identity seed: "no change of basis"
    for (size_t c = 1; c < pop.size(); ++c)
        pop[c].word = random_word(n, init_mean, init_std, rng);

    auto score_all = [&](int generation) {
        // Stream seeds are fixed per (generation, slot), so scoring is
        // deterministic no matter how the work is scheduled.
        parallel_for(static_cast<int>(pop.size()), cfg.workers, [&](int c) {
            auto& cand = pop[static_cast<size_t>(c)];
            cand.matrix = word_to_matrix(cand.word);
            cand.score = scorer.score(
                cand.matrix,
                derive_seed(seed, 2 + static_cast<u64>(generation), static_cast<u64>(c)));
        });
    };
    score_all(0);

    BasisSearchResult result;
    result.identity_score = pop[0].score;
    result.best = *std::min_element(pop.begin(), pop.end(), [](const auto& a, const auto& b) {
        return a.score < b.score;
    });

    std::vector<double> scores(pop.size());
    for (int gen = 1; gen <= generations; ++gen) {
        for (size_t c = 0; c < pop.size(); ++c) scores[c] = pop[c].score;

        std::vector<BasisCandidate> next;
        next.reserve(pop.size());
        for (size_t pair = 0; pair < pop.size() / 2; ++pair) {
            const BasisCandidate& pa = pop[tournament_min(scores, cfg.tournament_size, rng)];
            const BasisCandidate& pb = pop[tournament_min(scores, cfg.tournament_size, rng)];
            if (rng.chance(cfg.crossover_prob)) {
                BasisWord wa = cfg.rewrite_pass ? simplify(pa.word) : pa.word;
                BasisWord wb = cfg.rewrite_pass ? simplify(pb.word) : pb.word;
                auto [c1, c2] = crossover(wa, wb, rng);
                next.push_back({std::move(c1), {}, 0.0});
                next.push_back({std::move(c2), {}, 0.0});
            } else {
                next.push_back({pa.word, {}, 0.0});
                next.push_back({pb.word, {}, 0.0});
            }
        }
        for (auto& cand : next)
            if (rng.chance(cfg.per_individual_mutation_prob))
                cand.word = mutate(cand.word, cfg.per_symbol_op_prob, rng);

        pop = std::move(next);
        score_all(gen);
        ++result.generations_executed;

        auto gen_best = std::min_element(pop.begin(), pop.end(), [](const auto& a, const auto& b) {
            return a.score < b.score;
        });
        if (gen_best->score < result.best.score) result.best = *gen_best;
    }
    return result;
}

}  // namespace cobga
