#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "doco/oracles.hpp"
#include "doco/svg_plot.hpp"

namespace doco {

// One CLI invocation: datasets x algorithms x seeds.
struct ExperimentSpec {
    std::vector<std::string> datasets;  // manifest names, or "synthetic"
    std::vector<std::string> algos;     // ftdl | aftdl | dda
    int num_agents = 2;
    int max_delay = 100;
    int horizon = 8000;
    double lambda = 0.01;
    double radius = 1.0;
    std::vector<std::uint64_t> seeds = {1};
    std::string out_dir = "out";
    bool dump_decisions = false;
    std::string manifest_path = "data/manifest.json";
    int sample_total = 10000;
    int sample_train = 8000;
    int synthetic_dim = 5;
    double synthetic_anchor_radius = 1.0;
    ActivationPolicy activation = ActivationPolicy::RoundRobin;
    bool skip_regret = false;  // skip the offline-optimum solve (regret reported as nan)

    std::string scenario() const {
        return "M" + std::to_string(num_agents) + "_d" + std::to_string(max_delay);
    }
};

// Presets from the experimental protocol: "paper-2agent" (M=2, d=100) and
// "paper-20agent" (M=20, d=1000); both use T=8000, lambda=0.01, R=1, the
// four benchmark datasets and the aftdl/dda pair unless overridden.
void apply_preset(ExperimentSpec& spec, const std::string& preset);

struct MetricsRow {
    std::string dataset;
    std::string algo;
    std::string scenario;
    std::uint64_t seed = 0;
    double final_loss = 0.0;
    double regret = 0.0;
    double accuracy = 0.0;  // nan for synthetic runs
    double per_round_sec = 0.0;
};

struct MetricsTable {
    std::vector<MetricsRow> rows;
    // CSV "dataset,algo,scenario,final_loss,regret,acc,per_round_sec"
    void to_csv(std::ostream& out) const;
    void save_csv(const std::string& path) const;
};

// Result of one (dataset, algo, seed) run, kept for plotting and tests.
struct RunResult {
    std::string run_id;
    std::string dataset;
    std::string algo;
    std::uint64_t seed = 0;
    RunTrace trace;
    RegretReport regret;
    double accuracy = 0.0;
    double w_max = 0.0;
    double G = 0.0;
};

struct ExperimentOutput {
    MetricsTable metrics;
    std::vector<RunResult> runs;
};

// Runs the full grid, writing per-run trace/regret/meta CSVs, aggregate
// dumps, metrics.csv and the figures into spec.out_dir.
ExperimentOutput run_experiment(const ExperimentSpec& spec);

// One figure per dataset overlaying the cumulative-loss curves of all
// algorithms (first seed), plus regret-vs-bound figures for synthetic runs.
// Every figure is written next to the CSV that contains its data.
void emit_plots(const ExperimentSpec& spec, const std::vector<RunResult>& runs);

}  // namespace doco
