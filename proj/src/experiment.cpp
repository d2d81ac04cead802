#include "cobga/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>

#include "cobga/stats.hpp"

namespace cobga {

namespace {

namespace fs = std::filesystem;

std::string resolve_path(const std::string& base_dir, const std::string& path) {
    fs::path p(path);
    if (p.is_absolute() || base_dir.empty()) return path;
    return (fs::path(base_dir) / p).string();
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

int parse_sample_spec(const std::string& s, int n) {
    if (s.empty() || s == "square") return n * n;
    if (s == "cubic") return n * n * n;
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size() || v < 2) throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        throw UsageError("sample must be square, cubic or an integer >= 2: " + s);
    }
}

ExperimentSpec experiment_spec_from_json(const json& j, const std::string& base_dir) {
    ExperimentSpec spec;
    try {
        spec.instance_path = resolve_path(base_dir, j.at("instance").get<std::string>());
        if (j.contains("repetitions")) spec.repetitions = j.at("repetitions").get<int>();
        if (j.contains("master_seed")) spec.master_seed = j.at("master_seed").get<u64>();
        if (j.contains("ga")) {
            const json& g = j.at("ga");
            if (g.contains("population")) spec.ga.population_size = g.at("population").get<int>();
            if (g.contains("generations")) spec.ga.generations = g.at("generations").get<int>();
        }
        if (!j.contains("arms") || !j.at("arms").is_array() || j.at("arms").empty())
            throw DataError("experiment spec: needs a non-empty \"arms\" array");
        for (const json& a : j.at("arms")) {
            ArmSpec arm;
            arm.label = a.at("label").get<std::string>();
            const json& basis = a.at("basis");
            if (basis.is_string() && basis.get<std::string>() == "none") {
                arm.source = ArmSpec::Source::None;
            } else if (basis.is_object() && basis.contains("file")) {
                arm.source = ArmSpec::Source::File;
                arm.basis_file = resolve_path(base_dir, basis.at("file").get<std::string>());
            } else if (basis.is_object() && basis.contains("search")) {
                arm.source = ArmSpec::Source::Search;
                const json& s = basis.at("search");
                std::string evaluator = s.value("evaluator", std::string("epistasis"));
                if (evaluator == "epistasis")
                    arm.search.evaluator = BasisEvaluatorKind::Epistasis;
                else if (evaluator == "meta")
                    arm.search.evaluator = BasisEvaluatorKind::Meta;
                else
                    throw DataError("experiment spec: evaluator must be epistasis or meta");
                if (s.contains("sample")) {
                    const json& sample = s.at("sample");
                    arm.sample_spec = sample.is_string() ? sample.get<std::string>()
                                                         : std::to_string(sample.get<int>());
                }
                if (s.contains("population")) arm.search.population_size = s.at("population").get<int>();
                if (s.contains("generations")) arm.search.generations = s.at("generations").get<int>();
                if (s.contains("rewrite_pass")) arm.search.rewrite_pass = s.at("rewrite_pass").get<bool>();
            } else {
                throw DataError("experiment spec: basis must be \"none\", {file}, or {search}");
            }
            spec.arms.push_back(std::move(arm));
        }
    } catch (const json::exception& e) {
        throw DataError(std::string("experiment spec: ") + e.what());
    }
    std::set<std::string> labels;
    for (const auto& arm : spec.arms)
        if (!labels.insert(arm.label).second)
            throw DataError("experiment spec: duplicate arm label " + arm.label);
    return spec;
}

void resolve_experiment_defaults(ExperimentSpec& spec, const InstanceFile& instance,
                                 bool paper_scale) {
    if (spec.repetitions <= 0) spec.repetitions = paper_scale ? 100 : 20;
    if (spec.ga.generations <= 0) {
        bool nk = instance.kind() == "nk";
        spec.ga.generations = paper_scale ? (nk ? 300000 : 10000) : (nk ? 10000 : 2000);
    }
    int n = instance.length();
    for (auto& arm : spec.arms) {
        if (arm.source == ArmSpec::Source::Search && arm.search.sample_size == 0 &&
            !arm.sample_spec.empty())
            arm.search.sample_size = parse_sample_spec(arm.sample_spec, n);
    }
}

u64 arm_seed(u64 master_seed, const std::string& label) {
    return derive_seed(master_seed, fnv1a64(label));
}

ExperimentReport run_experiment(const ExperimentSpec& spec, const InstanceFile& instance,
                                int workers) {
    auto problem = instance.make_problem();
    int n = problem->length();

    ExperimentReport rep;
    rep.instance_path = spec.instance_path;
    rep.instance_kind = instance.kind();
    rep.length = n;
    rep.optimum = problem->optimum();
    rep.master_seed = spec.master_seed;
    rep.repetitions = spec.repetitions;

    for (const ArmSpec& arm : spec.arms) {
        auto arm_start = std::chrono::steady_clock::now();
        u64 base = arm_seed(spec.master_seed, arm.label);

        ArmResult result;
        result.label = arm.label;

        std::optional<BitMatrix> basis;
        if (arm.source == ArmSpec::Source::Search) {
            BasisSearchConfig search_cfg = arm.search;
            search_cfg.workers = workers;
            BasisSearchResult search = search_basis(*problem, search_cfg, derive_seed(base, 0));
            basis = search.best.matrix;
            BasisReport br;
            br.word_text = word_to_text(search.best.word);
            br.score_before = search.identity_score;
            br.score_after = search.best.score;
            br.decrease_rate = search.identity_score != 0.0
                                   ? 100.0 * (search.identity_score - search.best.score) /
                                         search.identity_score
                                   : 0.0;
            result.basis = std::move(br);
        } else if (arm.source == ArmSpec::Source::File) {
            BasisWord w = word_from_text(read_text_file(arm.basis_file));
            if (w.n != n) throw DataError("basis dimension mismatch for arm " + arm.label);
            BitMatrix t = word_to_matrix(w);
            // Report the sample epistasis before/after for file bases too,
            // over the arm's own derived sample stream.
            Rng sample_rng(derive_seed(base, 0));
            Sample s = sample_population(*problem, n * n, sample_rng);
            BasisReport br;
            br.word_text = word_to_text(w);
            br.score_before = davidor_epistasis(s).value;
            br.score_after = evaluate_basis_epistasis(t, s);
            br.decrease_rate =
                br.score_before != 0.0
                    ? 100.0 * (br.score_before - br.score_after) / br.score_before
                    : 0.0;
            result.basis = std::move(br);
            basis = std::move(t);
        }

        result.runs.resize(static_cast<size_t>(spec.repetitions));
        const BitMatrix* basis_ptr = basis ? &*basis : nullptr;
        const FitnessProblem& prob = *problem;
        const GAConfig& cfg = spec.ga;
        parallel_for(spec.repetitions, workers, [&](int i) {
            result.runs[static_cast<size_t>(i)] =
                run_ga(prob, basis_ptr, cfg, derive_seed(base, 1 + static_cast<u64>(i)));
        });

        std::vector<double> bests;
        bests.reserve(result.runs.size());
        for (const auto& run : result.runs) bests.push_back(run.best_fitness);
        result.best = *std::max_element(bests.begin(), bests.end());
        result.mean = mean_of(bests);
        result.sd = sample_sd(bests);
        Quartiles q = quartiles(bests);
        result.q1 = q.q1;
        result.q2 = q.q2;
        result.q3 = q.q3;
        if (rep.optimum) {
            for (double b : bests)
                if (b >= *rep.optimum - 1e-9) ++result.optima_count;
        }
        result.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - arm_start).count();
        rep.arms.push_back(std::move(result));
    }
    return rep;
}

json experiment_report_to_json(const ExperimentReport& rep, bool include_traces) {
    json arms = json::array();
    for (const auto& arm : rep.arms) {
        json a{{"label", arm.label},
               {"optima_count", arm.optima_count},
               {"best", arm.best},
               {"mean", arm.mean},
               {"sd", arm.sd},
               {"q1", arm.q1},
               {"q2", arm.q2},
               {"q3", arm.q3}};
        if (arm.basis) {
            a["basis"] = json{{"word", arm.basis->word_text},
                              {"score_before", arm.basis->score_before},
                              {"score_after", arm.basis->score_after},
                              {"decrease_rate", arm.basis->decrease_rate}};
        }
        json runs = json::array();
        for (const auto& run : arm.runs) runs.push_back(run_record_to_json(run, include_traces));
        a["runs"] = runs;
        arms.push_back(std::move(a));
    }
    json j{{"instance", rep.instance_path},
           {"kind", rep.instance_kind},
           {"length", rep.length},
           {"master_seed", rep.master_seed},
           {"repetitions", rep.repetitions},
           {"arms", arms}};
    if (rep.optimum) j["optimum"] = *rep.optimum;
    return j;
}

std::string experiment_csv(const ExperimentReport& rep, bool with_timing) {
    std::ostringstream out;
    out << "label,optima_count,best,mean,sd,q1,q2,q3,wall_seconds\n";
    for (const auto& arm : rep.arms) {
        out << arm.label << ',' << arm.optima_count << ',' << format_double(arm.best) << ','
            << format_double(arm.mean) << ',' << format_double(arm.sd) << ','
            << format_double(arm.q1) << ',' << format_double(arm.q2) << ','
            << format_double(arm.q3) << ',' << format_double(with_timing ? arm.wall_seconds : 0.0)
            << '\n';
    }
    return out.str();
}

std::string boxplot_csv(const ExperimentReport& rep) {
    std::ostringstream out;
    out << "label,run,normalized_best\n";
    for (const auto& arm : rep.arms) {
        for (size_t i = 0; i < arm.runs.size(); ++i) {
            double v = arm.runs[i].best_fitness;
            if (rep.optimum && *rep.optimum > 0) v /= *rep.optimum;
            out << arm.label << ',' << i << ',' << format_double(v) << '\n';
        }
    }
    return out.str();
}

void write_experiment_outputs(const ExperimentReport& rep, const std::string& out_dir,
                              bool with_timing) {
    fs::create_directories(fs::path(out_dir) / "runs");
    write_text_file((fs::path(out_dir) / "report.json").string(),
                    experiment_report_to_json(rep).dump(2) + "\n");
    write_text_file((fs::path(out_dir) / "report.csv").string(), experiment_csv(rep, with_timing));
    write_text_file((fs::path(out_dir) / "boxplot.csv").string(), boxplot_csv(rep));
    for (const auto& arm : rep.arms) {
        for (size_t i = 0; i < arm.runs.size(); ++i) {
            std::string name = arm.label + "-" + std::to_string(i) + ".json";
            write_text_file((fs::path(out_dir) / "runs" / name).string(),
                            run_record_to_json(arm.runs[i], true).dump(2) + "\n");
        }
    }
    // Timing and timestamps are quarantined here so everything above is
    // byte-for-byte reproducible from (spec, master seed).
    json meta{{"finished_unix",
               std::chrono::duration_cast<std::chrono::seconds>(
                   std::chrono::system_clock::now().time_since_epoch())
                   .count()}};
    json walls = json::object();
    for (const auto& arm : rep.arms) walls[arm.label] = arm.wall_seconds;
    meta["wall_seconds"] = walls;
    write_text_file((fs::path(out_dir) / "meta.json").string(), meta.dump(2) + "\n");
}

std::string render_report_markdown(const std::vector<json>& reports) {
    if (reports.empty()) throw UsageError("report: no input files");
    std::ostringstream out;
    for (const json& rep : reports) {
        try {
            out << "# Experiment: " << rep.at("instance").get<std::string>() << " ("
                << rep.at("kind").get<std::string>() << ", n=" << rep.at("length").get<int>()
                << ", " << rep.at("repetitions").get<int>() << " runs, master seed "
                << rep.at("master_seed").get<u64>() << ")\n\n";
            bool normalized = rep.contains("optimum");
            double opt = normalized ? rep.at("optimum").get<double>() : 1.0;
            out << "| Arm | Optima | Best | Mean | SD | Q1 | Q2 | Q3 |\n";
            out << "|---|---|---|---|---|---|---|---|\n";
            for (const json& arm : rep.at("arms")) {
                double scale = normalized && opt > 0 ? opt : 1.0;
                out << "| " << arm.at("label").get<std::string>() << " | "
                    << arm.at("optima_count").get<int>() << " | "
                    << format_double(arm.at("best").get<double>() / scale) << " | "
                    << format_double(arm.at("mean").get<double>() / scale) << " | "
                    << format_double(arm.at("sd").get<double>() / scale) << " | "
                    << format_double(arm.at("q1").get<double>() / scale) << " | "
                    << format_double(arm.at("q2").get<double>() / scale) << " | "
                    << format_double(arm.at("q3").get<double>() / scale) << " |\n";
            }
            if (normalized) out << "\nValues are normalized by the optimum fitness.\n";
            bool any_basis = false;
            for (const json& arm : rep.at("arms"))
                if (arm.contains("basis")) any_basis = true;
            if (any_basis) {
                out << "\n## Epistasis on the evaluation sample\n\n";
                out << "| Arm | Before | After | Decrease rate (%) |\n|---|---|---|---|\n";
                for (const json& arm : rep.at("arms")) {
                    if (!arm.contains("basis")) continue;
                    const json& b = arm.at("basis");
                    out << "| " << arm.at("label").get<std::string>() << " | "
                        << format_double(b.at("score_before").get<double>()) << " | "
                        << format_double(b.at("score_after").get<double>()) << " | "
                        << format_double(b.at("decrease_rate").get<double>()) << " |\n";
                }
            }
            out << '\n';
        } catch (const json::exception& e) {
            throw DataError(std::string("report json schema: ") + e.what());
        }
    }
    return out.str();
}

std::string epistasis_table_csv(int max_n) {
    if (max_n > 24) throw UsageError("epistasis-table: max-n larger than 24 is not enumerable");
    if (max_n < 2) throw UsageError("epistasis-table: max-n must be >= 2");
    std::ostringstream out;
    out << "n,epistasis_F,epistasis_Fprime\n";
    for (int n = 2; n <= max_n; n += 2) {
        ParityProblem parity(n);
        OnemaxProblem ones(n);
        double f = davidor_epistasis(enumerate_population(parity)).value;
        double fprime = davidor_epistasis(enumerate_population(ones)).value;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%d,%.10g,%.10g\n", n, f, fprime);
        out << buf;
    }
    return out.str();
}

}  // namespace cobga
