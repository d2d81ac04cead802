#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cobga/ga.hpp"
#include "test_helpers.hpp"

using namespace cobga;

namespace {

// g(w) = f(T^-1 w): the problem seen from the transformed coordinates.
class PulledBackProblem final : public FitnessProblem {
public:
    PulledBackProblem(const FitnessProblem& base, BitMatrix t_inv)
        : base_(base), t_inv_(std::move(t_inv)) {}
    int length() const override { return base_.length(); }
    double evaluate(const BitVector& v) const override {
        return base_.evaluate(mat_vec_mul(t_inv_, v));
    }
    std::optional<double> optimum() const override { return base_.optimum(); }

private:
    const FitnessProblem& base_;
    BitMatrix t_inv_;
};

}  // namespace

TEST_CASE("config validation") {
    GAConfig cfg;
    cfg.population_size = 7;
    CHECK_THROWS_AS(validate_config(cfg, 10), std::invalid_argument);
    cfg.population_size = 8;
    CHECK_NOTHROW(validate_config(cfg, 10));
    cfg.crossover_prob = 1.5;
    CHECK_THROWS_AS(validate_config(cfg, 10), std::invalid_argument);
    GAConfig defaults;
    CHECK(resolved_population_size(defaults, 25) == 100);
}

TEST_CASE("tournament selection basics") {
    Rng rng(3);
    std::vector<double> flat(8, 1.0);
    CHECK(tournament_select(flat, 3, rng) < flat.size());

    std::vector<double> peaked = {0.0, 9.0, 0.0};
    for (int t = 0; t < 50; ++t) {
        // Whatever gets drawn, a draw containing index 1 must return it.
        size_t pick = tournament_select(peaked, 3, rng);
        if (pick == 1) break;
        CHECK(peaked[pick] == 0.0);
    }
}

TEST_CASE("tournament selection pressure matches order statistics") {
    // Best of three uniform draws over ten distinct ranks: the top rank wins
    // with probability 1 - (9/10)^3 = 0.271.
    Rng rng(4);
    std::vector<double> fits;
    for (int i = 1; i <= 10; ++i) fits.push_back(static_cast<double>(i));
    int hits = 0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t)
        if (tournament_select(fits, 3, rng) == 9) ++hits;
    double freq = hits / static_cast<double>(trials);
    double sigma = std::sqrt(0.271 * 0.729 / trials);
    CHECK(std::abs(freq - 0.271) < 3.0 * sigma + 1e-4);
}

TEST_CASE("one point crossover") {
    Rng rng(5);
    BitVector a = BitVector::from_string("000");
    BitVector b = BitVector::from_string("111");
    // Scan until the cut lands at 1; the children are then forced.
    bool saw_cut_at_1 = false;
    for (int t = 0; t < 200 && !saw_cut_at_1; ++t) {
        auto [c1, c2] = one_point_crossover(a, b, rng);
        if (c1.to_string() == "011") {
            CHECK(c2.to_string() == "100");
            saw_cut_at_1 = true;
        }
        CHECK(c1.popcount() + c2.popcount() == 3);  // bit conservation
    }
    CHECK(saw_cut_at_1);

    auto [s1, s2] = one_point_crossover(a, a, rng);
    CHECK(s1 == a);
    CHECK(s2 == a);
    CHECK_THROWS_AS(one_point_crossover(BitVector(1), BitVector(1), rng), std::invalid_argument);
}

TEST_CASE("bit conservation holds for random parents") {
    Rng rng(6);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + rng.below_int(40);
        BitVector a = BitVector::random(n, rng);
        BitVector b = BitVector::random(n, rng);
        auto [c1, c2] = one_point_crossover(a, b, rng);
        CHECK(c1.popcount() + c2.popcount() == a.popcount() + b.popcount());
    }
}

TEST_CASE("flip mutation") {
    Rng rng(7);
    BitVector v = BitVector::random(30, rng);
    CHECK(flip_mutation(v, 0.0, rng) == v);

    long flips = 0;
    const int trials = 5000;
    for (int t = 0; t < trials; ++t) {
        BitVector m = flip_mutation(v, 0.05, rng);
        flips += (m ^ v).popcount();
    }
    double mean = flips / static_cast<double>(trials);
    CHECK(std::abs(mean - 1.5) < 0.1);  // 30 genes * 0.05
}

TEST_CASE("next generation keeps the population size and honors zeroed rates") {
    Rng rng(8);
    int n = 12;
    GAConfig cfg;
    cfg.population_size = 10;
    cfg.crossover_prob = 0.0;
    cfg.per_individual_mutation_prob = 0.0;
    auto pop = random_population(n, 10, rng);
    std::vector<double> fits(10, 1.0);
    auto next = next_generation(pop, fits, cfg, rng);
    CHECK(next.size() == pop.size());

    // All-identical population with zero rates is a fixed point.
    std::vector<BitVector> same(10, BitVector::from_string("101010101010"));
    auto fixed = next_generation(same, fits, cfg, rng);
    for (const auto& ind : fixed) CHECK(ind == same[0]);
}

TEST_CASE("run_ga determinism and trace consistency") {
    Rng rng(9);
    VariantOnemaxProblem problem(gen_variant_onemax(10, rng));
    GAConfig cfg;
    cfg.generations = 60;

    RunRecord one = run_ga(problem, nullptr, cfg, 12345);
    RunRecord two = run_ga(problem, nullptr, cfg, 12345);
    CHECK(one.best_per_generation == two.best_per_generation);
    CHECK(one.best_genotype == two.best_genotype);
    CHECK(one.seed == 12345);

    double max_trace = *std::max_element(one.best_per_generation.begin(),
                                         one.best_per_generation.end());
    CHECK(one.best_fitness == max_trace);
    CHECK(problem.evaluate(one.best_genotype) == one.best_fitness);
    CHECK(one.generations_executed + 1 == static_cast<int>(one.best_per_generation.size()));
}

TEST_CASE("identity basis is stream-identical to no basis") {
    Rng rng(10);
    VariantOnemaxProblem problem(gen_variant_onemax(9, rng));
    GAConfig cfg;
    cfg.generations = 40;
    BitMatrix id = BitMatrix::identity(9);
    RunRecord with_id = run_ga(problem, &id, cfg, 777);
    RunRecord without = run_ga(problem, nullptr, cfg, 777);
    CHECK(with_id.best_per_generation == without.best_per_generation);
    CHECK(with_id.best_genotype == without.best_genotype);
    CHECK(with_id.best_fitness == without.best_fitness);
}

TEST_CASE("a run under basis T equals the plain run on the pulled-back problem") {
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        int n = 6 + trial;
        VariantOnemaxProblem problem(gen_variant_onemax(n, rng));
        BasisWord tw = random_word(n, 2.0 * n, 2.0, rng);
        BitMatrix t = word_to_matrix(tw);
        BitMatrix t_inv = *inverse(t);
        u64 seed = rng.next();

        GAConfig cfg;
        cfg.generations = 25;
        RunRecord conjugated = run_ga(problem, &t, cfg, seed);

        // Plain GA on g(w) = f(T^-1 w), started from the transformed copy of
        // the same initial population, sharing the evolution stream.
        Rng init(derive_seed(seed, 0));
        auto pop0 = random_population(n, resolved_population_size(cfg, n), init);
        auto transformed0 = change_basis(t, pop0);
        PulledBackProblem pulled(problem, t_inv);
        RunRecord plain = run_ga(pulled, nullptr, cfg, seed, &transformed0);

        CHECK(conjugated.best_per_generation == plain.best_per_generation);
        CHECK(conjugated.best_fitness == plain.best_fitness);
        CHECK(conjugated.best_genotype == mat_vec_mul(t_inv, plain.best_genotype));
    }
}

TEST_CASE("plain GA solves onemax and early-stops") {
    GAConfig cfg;
    cfg.generations = 2000;
    OnemaxProblem problem(20);
    for (u64 seed = 1; seed <= 20; ++seed) {
        RunRecord rec = run_ga(problem, nullptr, cfg, seed);
        CHECK(rec.best_fitness == 20.0);
        CHECK(rec.generations_executed < 2000);
    }
}

TEST_CASE("the right basis turns variant-onemax into an easy search") {
    Rng rng(12);
    int solved = 0;
    for (int trial = 0; trial < 20; ++trial) {
        VariantOnemaxInstance inst = gen_variant_onemax(20, rng);
        VariantOnemaxProblem problem(inst);
        GAConfig cfg;
        cfg.generations = 300;
        RunRecord rec = run_ga(problem, &inst.t, cfg, rng.next());
        if (rec.best_fitness == 20.0) ++solved;
    }
    CHECK(solved == 20);
}
