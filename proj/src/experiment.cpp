#include "doco/experiment.hpp"

#include <sys/utsname.h>
#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <thread>

#include "doco/synthetic.hpp"

namespace doco {

namespace {

constexpr const char* kBenchmarkDatasets[] = {"ijcnn1", "w8a", "phishing", "a9a"};

struct PreparedRun {
    std::vector<LossInstance> losses;
    std::vector<Example> test;  // empty for synthetic
    int dimension = 0;
    double w_max = 0.0;
    double G = 0.0;
};

PreparedRun prepare(const ExperimentSpec& spec, const std::string& dataset, std::uint64_t seed) {
    PreparedRun run;
    if (dataset == "synthetic") {
        run.dimension = spec.synthetic_dim;
        run.losses = make_quadratic_sequence(run.dimension, spec.horizon,
                                             spec.synthetic_anchor_radius, spec.lambda, seed);
        run.G = gradient_budget(run.losses, spec.radius);
        run.w_max = 0.0;
        return run;
    }
    auto manifest = load_manifest(spec.manifest_path);
    auto entry = find_dataset(manifest, dataset);
    if (!entry)
        throw ConfigError("dataset '" + dataset + "' not in manifest " + spec.manifest_path);
    if (!std::filesystem::exists(entry->path))
        throw IoError("dataset file '" + entry->path + "' is missing; fetch it first, e.g. " +
                      "tools/fetch_datasets.sh or download " + dataset +
                      " from the LIBSVM binary collection");
    LibsvmData data = parse_libsvm_file(entry->path);
    if (entry->expected_examples > 0 &&
        static_cast<long>(data.examples.size()) != entry->expected_examples)
        throw IoError("dataset '" + dataset + "': parsed " + std::to_string(data.examples.size()) +
                      " examples, manifest expects " + std::to_string(entry->expected_examples));
    ExperimentDataset ds = sample_and_split(data, spec.sample_total, spec.sample_train, seed,
                                            spec.lambda, spec.radius, dataset);
    run.dimension = ds.dimension;
    run.losses = hinge_losses(ds, spec.horizon);
    run.test = std::move(ds.test);
    run.w_max = ds.w_max;
    run.G = ds.G;
    return run;
}

void write_run_meta(const std::string& path, const ExperimentSpec& spec, const std::string& dataset,
                    const std::string& algo, std::uint64_t seed, const PreparedRun& prep,
                    const RunTrace& trace, const DelaySchedule& schedule, double regret,
                    double accuracy, double per_round_sec) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.precision(17);
    out << "dataset=" << dataset << '\n'
        << "algo=" << algo << '\n'
        << "agents=" << spec.num_agents << '\n'
        << "dmax=" << spec.max_delay << '\n'
        << "rounds=" << spec.horizon << '\n'
        << "lambda=" << spec.lambda << '\n'
        << "radius=" << spec.radius << '\n'
        << "seed=" << seed << '\n'
        << "activation=" << to_string(spec.activation) << '\n'
        << "feedback_mode=" << to_string(feedback_mode_for(algo)) << '\n'
        << "dimension=" << prep.dimension << '\n'
        << "w_max=" << prep.w_max << '\n'
        << "G=" << prep.G << '\n'
        << "schedule_hash=" << schedule.hash() << '\n'
        << "order_violations=" << trace.order_violations << '\n'
        << "vectors_enqueued=" << trace.vectors_enqueued << '\n'
        << "messages_delivered=" << trace.messages_delivered << '\n'
        << "final_cum_loss=" << trace.final_cumulative_loss() << '\n'
        << "regret=" << regret << '\n'
        << "test_accuracy=" << accuracy << '\n'
        << "per_round_sec=" << per_round_sec << '\n';
    utsname uts{};
    if (uname(&uts) == 0) out << "os=" << uts.sysname << ' ' << uts.release << '\n';
    out << "host_cpus=" << std::thread::hardware_concurrency() << '\n';
}

}  // namespace

void apply_preset(ExperimentSpec& spec, const std::string& preset) {
    if (preset == "paper-2agent") {
        spec.num_agents = 2;
        spec.max_delay = 100;
    } else if (preset == "paper-20agent") {
        spec.num_agents = 20;
        spec.max_delay = 1000;
    } else {
        throw ConfigError("unknown preset '" + preset + "' (expected paper-2agent or paper-20agent)");
    }
    spec.horizon = 8000;
    spec.lambda = 0.01;
    spec.radius = 1.0;
    if (spec.datasets.empty())
        spec.datasets.assign(std::begin(kBenchmarkDatasets), std::end(kBenchmarkDatasets));
    if (spec.algos.empty()) spec.algos = {"aftdl", "dda"};
}

void MetricsTable::to_csv(std::ostream& out) const {
    out << "dataset,algo,scenario,final_loss,regret,acc,per_round_sec\n";
    out.precision(17);
    for (const MetricsRow& r : rows)
        out << r.dataset << ',' << r.algo << ',' << r.scenario << ',' << r.final_loss << ','
            << r.regret << ',' << r.accuracy << ',' << r.per_round_sec << '\n';
}

void MetricsTable::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    to_csv(out);
}

ExperimentOutput run_experiment(const ExperimentSpec& spec) {
    if (spec.datasets.empty()) throw ConfigError("run_experiment: no datasets given");
    if (spec.algos.empty()) throw ConfigError("run_experiment: no algorithms given");
    if (spec.seeds.empty()) throw ConfigError("run_experiment: no seeds given");
    std::filesystem::create_directories(spec.out_dir);

    ExperimentOutput output;
    for (const std::string& dataset : spec.datasets) {
        for (std::uint64_t seed : spec.seeds) {
            PreparedRun prep = prepare(spec, dataset, seed);
            Vec optimum;
            bool have_optimum = false;
            for (const std::string& algo : spec.algos) {
                RunConfig config;
                config.num_agents = spec.num_agents;
                config.horizon = spec.horizon;
                config.max_delay = spec.max_delay;
                config.lambda = spec.lambda;
                config.domain = BallDomain{prep.dimension, spec.radius};
                config.seed = seed;
                config.activation = spec.activation;
                config.feedback_mode = feedback_mode_for(algo);
                config.lipschitz_G = prep.G;

                DelaySchedule schedule = generate_delay_schedule(config);
                SimulationEngine engine(config, schedule, prep.losses, algo, {});
                RunTrace trace = engine.run();
                trace.loss_sequence_id = dataset + ":seed=" + std::to_string(seed);

                RunResult result;
                result.run_id = dataset + "_" + algo + "_" + spec.scenario() + "_seed" +
                                std::to_string(seed);
                result.dataset = dataset;
                result.algo = algo;
                result.seed = seed;
                result.w_max = prep.w_max;
                result.G = prep.G;

                double regret_final = std::numeric_limits<double>::quiet_NaN();
                if (!spec.skip_regret) {
                    if (!have_optimum) {
                        optimum = offline_optimum(prep.losses, config.domain);
                        have_optimum = true;
                    }
                    result.regret = regret_curve(trace, prep.losses, optimum, prep.G, spec.lambda,
                                                 spec.max_delay, spec.radius);
                    regret_final = result.regret.final_regret();
                    result.regret.save_csv(spec.out_dir + "/" + result.run_id + "_regret.csv");
                }

                double accuracy = std::numeric_limits<double>::quiet_NaN();
                if (!prep.test.empty())
                    accuracy = test_accuracy(trace.decisions.back(), prep.test);
                result.accuracy = accuracy;

                double per_round = 0.0;
                for (double s : trace.decide_seconds) per_round += s;
                per_round /= std::max<std::size_t>(1, trace.decide_seconds.size());

                const std::string base = spec.out_dir + "/" + result.run_id;
                trace.save_csv(base + "_trace.csv");
                trace.save_aggregates(base + "_aggregates.csv");
                if (spec.dump_decisions) trace.save_decisions(base + "_decisions.csv");
                schedule.save_csv(base + "_schedule.csv");
                write_run_meta(base + "_meta.txt", spec, dataset, algo, seed, prep, trace,
                               schedule, regret_final, accuracy, per_round);

                output.metrics.rows.push_back(MetricsRow{dataset, algo, spec.scenario(), seed,
                                                         trace.final_cumulative_loss(), regret_final,
                                                         accuracy, per_round});
                result.trace = std::move(trace);
                output.runs.push_back(std::move(result));
            }
        }
    }
    output.metrics.save_csv(spec.out_dir + "/metrics.csv");
    emit_plots(spec, output.runs);
    return output;
}

void emit_plots(const ExperimentSpec& spec, const std::vector<RunResult>& runs) {
    if (runs.empty()) throw ConfigError("emit_plots: no runs to plot");
    std::filesystem::create_directories(spec.out_dir);
    for (const std::string& dataset : spec.datasets) {
        std::vector<PlotSeries> series;
        std::uint64_t first_seed = spec.seeds.front();
        for (const RunResult& run : runs) {
            if (run.dataset != dataset || run.seed != first_seed) continue;
            PlotSeries s;
            s.label = run.algo;
            std::vector<double> cum = run.trace.cumulative_loss();
            s.x.resize(cum.size());
            for (std::size_t t = 0; t < cum.size(); ++t) s.x[t] = static_cast<double>(t + 1);
            s.y = std::move(cum);
            series.push_back(std::move(s));
        }
        if (series.empty()) continue;
        PlotOptions options;
        options.title = dataset + " (" + spec.scenario() + ")";
        options.x_label = "round";
        options.y_label = "cumulative loss";
        write_svg_chart(spec.out_dir + "/" + dataset + "_" + spec.scenario() + "_cumloss.svg",
                        series, options);

        if (dataset == "synthetic") {
            for (const RunResult& run : runs) {
                if (run.dataset != dataset || run.seed != first_seed) continue;
                if (run.regret.regret.empty()) continue;
                std::vector<PlotSeries> rs(2);
                rs[0].label = run.algo + " regret";
                rs[1].label = run.algo == "aftdl" ? "bound 2d(G+2lR)^2(lnT+1)/l"
                                                  : "bound 2dG^2(1+lnT)/l";
                const std::vector<double>& bound =
                    run.algo == "aftdl" ? run.regret.bound_aftdl : run.regret.bound_ftdl;
                for (std::size_t t = 0; t < run.regret.regret.size(); ++t) {
                    double x = static_cast<double>(t + 1);
                    rs[0].x.push_back(x);
                    rs[0].y.push_back(run.regret.regret[t]);
                    rs[1].x.push_back(x);
                    rs[1].y.push_back(bound[t]);
                }
                PlotOptions ro;
                ro.title = run.run_id;
                ro.x_label = "round";
                ro.y_label = "cumulative regret";
                write_svg_chart(spec.out_dir + "/" + run.run_id + "_regret.svg", rs, ro);
            }
        }
    }
}

}  // namespace doco
