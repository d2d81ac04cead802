// Command-line front end: instance generation, basis search, GA runs,
// experiment campaigns and report rendering.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "cobga/basis_search.hpp"
#include "cobga/experiment.hpp"
#include "cobga/io.hpp"

namespace fs = std::filesystem;
using namespace cobga;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct GlobalOpts {
    u64 seed = 1;
    int workers = 1;
    std::string out_dir = ".";
    bool paper_scale = false;
};

std::string out_path(const GlobalOpts& g, const std::string& name) {
    fs::path p(name);
    if (p.is_absolute()) return name;
    return (fs::path(g.out_dir) / p).string();
}

void emit_file(const std::string& path, const std::string& content) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    write_text_file(path, content);
}

int cmd_gen_instance(const GlobalOpts& g, const std::string& kind, int n, int k,
                     const std::string& out) {
    Rng rng(g.seed);
    InstanceFile file;
    if (kind == "variant-onemax") {
        file.payload = gen_variant_onemax(n, rng);
    } else if (kind == "nk") {
        file.payload = gen_nk(n, k, rng);
    } else {
        throw UsageError("gen-instance: kind must be variant-onemax or nk");
    }
    std::string path = out_path(g, out);
    std::string body = file.to_json().dump(2) + "\n";
    emit_file(path, body);
    std::printf("%s %s\n", content_digest(body).c_str(), path.c_str());
    return kExitOk;
}

int cmd_search_basis(const GlobalOpts& g, const std::string& instance_path,
                     const std::string& evaluator, const std::string& sample, int pop, int gens,
                     int meta_k, int meta_g, const std::string& meta_aggregate, bool rewrite_pass,
                     const std::string& out) {
    InstanceFile instance = load_instance(instance_path);
    auto problem = instance.make_problem();
    int n = problem->length();

    BasisSearchConfig cfg;
    cfg.population_size = pop;
    cfg.generations = gens;
    cfg.rewrite_pass = rewrite_pass;
    cfg.workers = g.workers;
    if (evaluator == "epistasis") {
        cfg.evaluator = BasisEvaluatorKind::Epistasis;
        cfg.sample_size = parse_sample_spec(sample, n);
    } else if (evaluator == "meta") {
        cfg.evaluator = BasisEvaluatorKind::Meta;
        cfg.meta_k = meta_k;
        cfg.meta_g = meta_g;
        if (meta_aggregate == "mean")
            cfg.meta_aggregate = MetaAggregate::Mean;
        else if (meta_aggregate == "min")
            cfg.meta_aggregate = MetaAggregate::Min;
        else if (meta_aggregate == "median")
            cfg.meta_aggregate = MetaAggregate::Median;
        else
            throw UsageError("search-basis: meta-aggregate must be mean, min or median");
    } else {
        throw UsageError("search-basis: evaluator must be epistasis or meta");
    }

    BasisSearchResult result = search_basis(*problem, cfg, g.seed);

    std::string word_path = out_path(g, out);
    emit_file(word_path, word_to_text(result.best.word));
    double before = result.identity_score;
    double after = result.best.score;
    json sidecar{{"evaluator", evaluator},
                 {"score_before", before},
                 {"score_after", after},
                 {"decrease_rate", before != 0.0 ? 100.0 * (before - after) / before : 0.0},
                 {"seed", g.seed},
                 {"word_length", result.best.word.ops.size()}};
    emit_file(word_path + ".json", sidecar.dump(2) + "\n");
    std::printf("score_before=%.12g score_after=%.12g\n", before, after);
    return kExitOk;
}

int cmd_run(const GlobalOpts& g, const std::string& instance_path, const std::string& basis_path,
            int pop, int gens, const std::string& out, bool no_trace) {
    InstanceFile instance = load_instance(instance_path);
    auto problem = instance.make_problem();

    std::optional<BitMatrix> basis;
    if (basis_path != "none") {
        BasisWord w = word_from_text(read_text_file(basis_path));
        if (w.n != problem->length()) throw DataError("run: basis dimension mismatch");
        basis = word_to_matrix(w);
    }

    GAConfig cfg;
    cfg.population_size = pop;
    cfg.generations = gens;
    RunRecord rec = run_ga(*problem, basis ? &*basis : nullptr, cfg, g.seed);

    std::string body = run_record_to_json(rec, !no_trace).dump(2) + "\n";
    emit_file(out_path(g, out), body);
    std::printf("best_fitness=%.12g generations=%d\n", rec.best_fitness,
                rec.generations_executed);
    return kExitOk;
}

int cmd_experiment(const GlobalOpts& g, const std::string& spec_path, bool timing, bool seed_set) {
    json spec_json;
    try {
        spec_json = json::parse(read_text_file(spec_path));
    } catch (const json::exception& e) {
        throw DataError(std::string("experiment spec: ") + e.what());
    }
    std::string base_dir = fs::path(spec_path).parent_path().string();
    ExperimentSpec spec = experiment_spec_from_json(spec_json, base_dir);
    if (seed_set) spec.master_seed = g.seed;
    InstanceFile instance = load_instance(spec.instance_path);
    resolve_experiment_defaults(spec, instance, g.paper_scale);
    ExperimentReport rep = run_experiment(spec, instance, g.workers);
    write_experiment_outputs(rep, g.out_dir, timing);
    std::printf("wrote %s\n", (fs::path(g.out_dir) / "report.json").string().c_str());
    return kExitOk;
}

int cmd_epistasis(const GlobalOpts& g, const std::string& instance_path, const std::string& sample,
                  const std::string& basis_path, bool enumerate, const std::string& out) {
    InstanceFile instance = load_instance(instance_path);
    auto problem = instance.make_problem();
    int n = problem->length();

    Sample s;
    if (enumerate) {
        if (n > 24) throw UsageError("epistasis: --enumerate rejects n > 24");
        s = enumerate_population(*problem);
    } else {
        Rng rng(g.seed);
        s = sample_population(*problem, parse_sample_spec(sample, n), rng);
    }

    EpistasisReport base = davidor_epistasis(s);
    double value = base.value;
    if (basis_path != "none") {
        BasisWord w = word_from_text(read_text_file(basis_path));
        if (w.n != n) throw DataError("epistasis: basis dimension mismatch");
        value = evaluate_basis_epistasis(word_to_matrix(w), s);
    }
    json j{{"value", value}, {"mu", base.mu}, {"sample_size", base.sample_size}, {"seed", g.seed}};
    std::string body = j.dump(2) + "\n";
    if (out.empty())
        std::fputs(body.c_str(), stdout);
    else
        emit_file(out_path(g, out), body);
    return kExitOk;
}

int cmd_epistasis_table(const GlobalOpts& g, int max_n, const std::string& out) {
    std::string csv = epistasis_table_csv(max_n);
    if (out.empty())
        std::fputs(csv.c_str(), stdout);
    else
        emit_file(out_path(g, out), csv);
    return kExitOk;
}

int cmd_report(const GlobalOpts& g, const std::vector<std::string>& files,
               const std::string& out) {
    std::vector<json> reports;
    for (const auto& f : files) {
        try {
            reports.push_back(json::parse(read_text_file(f)));
        } catch (const json::exception& e) {
            throw DataError("report " + f + ": " + e.what());
        }
    }
    std::string md = render_report_markdown(reports);
    if (out.empty())
        std::fputs(md.c_str(), stdout);
    else
        emit_file(out_path(g, out), md);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Change-of-basis GA toolkit over Z2"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "Master seed")->capture_default_str();
    app.add_option("--workers", g.workers, "Worker threads for experiment runs")
        ->capture_default_str();
    app.add_option("--out-dir", g.out_dir, "Directory for output files")->capture_default_str();
    app.add_flag("--paper-scale", g.paper_scale,
                 "Use the full-scale experiment defaults instead of desk scale");

    // gen-instance
    auto* gen = app.add_subcommand("gen-instance", "Generate a benchmark instance file");
    std::string gen_kind = "variant-onemax", gen_out = "instance.json";
    int gen_n = 20, gen_k = 3;
    gen->add_option("--kind", gen_kind, "variant-onemax | nk")->capture_default_str();
    gen->add_option("--n", gen_n, "Chromosome length (N for nk)")->capture_default_str();
    gen->add_option("--k", gen_k, "Dependencies per gene (nk only)")->capture_default_str();
    gen->add_option("--out", gen_out, "Output file")->capture_default_str();

    // search-basis
    auto* sb = app.add_subcommand("search-basis", "Search a simplifying basis for an instance");
    std::string sb_instance, sb_evaluator = "epistasis", sb_sample = "square",
                sb_aggregate = "mean", sb_out = "basis.words";
    int sb_pop = 0, sb_gens = 0, sb_meta_k = 5, sb_meta_g = 0;
    bool sb_rewrite = false;
    sb->add_option("--instance", sb_instance, "Instance file")->required();
    sb->add_option("--evaluator", sb_evaluator, "epistasis | meta")->capture_default_str();
    sb->add_option("--sample", sb_sample, "square | cubic | <int>")->capture_default_str();
    sb->add_option("--pop", sb_pop, "Search population size (0 = 4n)")->capture_default_str();
    sb->add_option("--gens", sb_gens, "Search generations (0 = n)")->capture_default_str();
    sb->add_option("--meta-k", sb_meta_k, "Inner GA repetitions (meta)")->capture_default_str();
    sb->add_option("--meta-g", sb_meta_g, "Inner GA generations (meta, 0 = n)")
        ->capture_default_str();
    sb->add_option("--meta-aggregate", sb_aggregate, "mean | min | median")->capture_default_str();
    sb->add_flag("--rewrite-pass", sb_rewrite, "Simplify words before crossover");
    sb->add_option("--out", sb_out, "Output word file (sidecar: <out>.json)")
        ->capture_default_str();

    // run
    auto* run = app.add_subcommand("run", "One GA run on an instance");
    std::string run_instance, run_basis = "none", run_out = "run.json";
    int run_pop = 0, run_gens = 1000;
    bool run_no_trace = false;
    run->add_option("--instance", run_instance, "Instance file")->required();
    run->add_option("--basis", run_basis, "Basis word file or 'none'")->capture_default_str();
    run->add_option("--pop", run_pop, "Population size (0 = 4n)")->capture_default_str();
    run->add_option("--gens", run_gens, "Generation budget")->capture_default_str();
    run->add_option("--out", run_out, "Output record file")->capture_default_str();
    run->add_flag("--no-trace", run_no_trace, "Omit the per-generation trace");

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run a multi-arm experiment from a spec file");
    std::string exp_spec;
    bool exp_timing = false;
    exp->add_option("--spec", exp_spec, "Experiment spec JSON")->required();
    exp->add_flag("--timing", exp_timing,
                  "Write measured wall seconds into report.csv (breaks byte reproducibility)");

    // epistasis
    auto* epi = app.add_subcommand("epistasis", "Davidor epistasis of an instance");
    std::string epi_instance, epi_sample = "square", epi_basis = "none", epi_out;
    bool epi_enumerate = false;
    epi->add_option("--instance", epi_instance, "Instance file")->required();
    epi->add_option("--sample", epi_sample, "square | cubic | <int>")->capture_default_str();
    epi->add_option("--basis", epi_basis, "Apply this basis word file before measuring")
        ->capture_default_str();
    epi->add_flag("--enumerate", epi_enumerate, "Full enumeration (n <= 24)");
    epi->add_option("--out", epi_out, "Output file (default stdout)");

    // epistasis-table
    auto* table = app.add_subcommand("epistasis-table",
                                     "Exact epistasis of the motivating F/F' pair for even n");
    int table_max_n = 16;
    std::string table_out;
    table->add_option("--max-n", table_max_n, "Largest (even) n, at most 24")
        ->capture_default_str();
    table->add_option("--out", table_out, "Output CSV file (default stdout)");

    // report
    auto* rpt = app.add_subcommand("report", "Render experiment reports as markdown");
    std::vector<std::string> rpt_files;
    std::string rpt_out;
    rpt->add_option("files", rpt_files, "report.json files")->required();
    rpt->add_option("--out", rpt_out, "Output markdown file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen_instance(g, gen_kind, gen_n, gen_k, gen_out);
        if (sb->parsed())
            return cmd_search_basis(g, sb_instance, sb_evaluator, sb_sample, sb_pop, sb_gens,
                                    sb_meta_k, sb_meta_g, sb_aggregate, sb_rewrite, sb_out);
        if (run->parsed())
            return cmd_run(g, run_instance, run_basis, run_pop, run_gens, run_out, run_no_trace);
        if (exp->parsed())
            return cmd_experiment(g, exp_spec, exp_timing, app.count("--seed") > 0);
        if (epi->parsed())
            return cmd_epistasis(g, epi_instance, epi_sample, epi_basis, epi_enumerate, epi_out);
        if (table->parsed()) return cmd_epistasis_table(g, table_max_n, table_out);
        if (rpt->parsed()) return cmd_report(g, rpt_files, rpt_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
