#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobga/basis_search.hpp"
#include "cobga/io.hpp"
#include "cobga/parallel.hpp"

namespace cobga {

// One comparison arm: the plain GA, a searched basis, or a basis from a word
// file. A searched basis is found once per arm and reused by every run.
struct ArmSpec {
    enum class Source { None, Search, File };
    std::string label;
    Source source = Source::None;
    BasisSearchConfig search{};   // used when source == Search
    std::string sample_spec;      // "square", "cubic" or an integer literal
    std::string basis_file;       // used when source == File
};

// Parses "square" -> n^2, "cubic" -> n^3, or a plain integer. Throws
// UsageError on anything else.
int parse_sample_spec(const std::string& s, int n);

struct ExperimentSpec {
    std::string instance_path;
    std::vector<ArmSpec> arms;
    int repetitions = 0;  // 0 -> default (20 desk scale, 100 paper scale)
    GAConfig ga{};        // generations 0 -> per-kind default
    u64 master_seed = 1;
};

// Parses the spec JSON; relative instance/basis paths resolve against
// base_dir. Throws DataError on schema problems.
ExperimentSpec experiment_spec_from_json(const json& j, const std::string& base_dir);

// Fills unset repetitions/generations with the per-kind defaults:
// desk scale 20 reps, 2000 generations (variant-onemax) / 10000 (NK);
// paper scale 100 reps, 10000 / 300000.
void resolve_experiment_defaults(ExperimentSpec& spec, const InstanceFile& instance,
                                 bool paper_scale);

struct BasisReport {
    std::string word_text;  // word file content for the arm's basis
    double score_before = 0.0;
    double score_after = 0.0;
    double decrease_rate = 0.0;  // 100 * (before - after) / before
};

struct ArmResult {
    std::string label;
    int optima_count = 0;  // runs whose best hit the known optimum
    double best = 0.0;
    double mean = 0.0;
    double sd = 0.0;
    double q1 = 0.0, q2 = 0.0, q3 = 0.0;
    std::vector<RunRecord> runs;
    std::optional<BasisReport> basis;  // present for Search/File arms
    double wall_seconds = 0.0;         // measured; reported via the side file
};

struct ExperimentReport {
    std::string instance_path;
    std::string instance_kind;
    int length = 0;
    std::optional<double> optimum;
    u64 master_seed = 0;
    int repetitions = 0;
    std::vector<ArmResult> arms;
};

// Seed streams per arm, derived from the master seed and the arm LABEL (not
// its position), so adding or reordering arms never perturbs existing runs:
//   arm base   = derive_seed(master, fnv1a64(label))
//   basis search = derive_seed(arm base, 0)
//   run i        = derive_seed(arm base, 1 + i)
u64 arm_seed(u64 master_seed, const std::string& label);

// Executes every arm: resolves its basis (searching once if requested), runs
// `repetitions` seeded GA runs (up to `workers` in parallel), and aggregates
// best fitnesses. Deterministic given (spec, master seed).
ExperimentReport run_experiment(const ExperimentSpec& spec, const InstanceFile& instance,
                                int workers);

json experiment_report_to_json(const ExperimentReport& rep, bool include_traces = false);

// CSV rows: label,optima_count,best,mean,sd,q1,q2,q3,wall_seconds. Timing is
// wall-clock and would break byte-for-byte reproducibility, so the column is
// written as 0.000 unless with_timing is set; measured times always go to the
// metadata side file.
std::string experiment_csv(const ExperimentReport& rep, bool with_timing);

// label,run,normalized_best; fitness divided by the optimum where known.
std::string boxplot_csv(const ExperimentReport& rep);

// Writes report.json, report.csv, boxplot.csv, runs/<label>-<i>.json and
// meta.json (the only file carrying timestamps/timing) under out_dir.
void write_experiment_outputs(const ExperimentReport& rep, const std::string& out_dir,
                              bool with_timing);

// Markdown rendering of one or more report JSONs: a stats table per report
// plus an epistasis before/after table when basis arms are present.
std::string render_report_markdown(const std::vector<json>& reports);

// Full-enumeration epistasis of the motivating pair of evaluation functions
// for even n up to max_n. CSV: n,epistasis_F,epistasis_Fprime.
std::string epistasis_table_csv(int max_n);

}  // namespace cobga
