#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "doco/libsvm.hpp"
#include "doco/losses.hpp"

namespace doco {

// Sampled and split experiment data. Round t of a run uses train[t-1].
struct ExperimentDataset {
    std::string name;
    std::vector<Example> train;
    std::vector<Example> test;
    int dimension = 0;
    double lambda = 0.0;
    double radius = 0.0;
    double w_max = 0.0;  // max feature norm over the sampled examples
    double G = 0.0;      // lambda * radius + w_max
};

// (w_max, G) with G = lambda * R + w_max.
std::pair<double, double> compute_budget(std::span<const Example> examples, double lambda, double R);

// Uniform sample of `total` examples without replacement (SplitMix64 stream
// DataSampling of the seed), first `train_count` in sampled order become the
// round-by-round training sequence, the rest the test set.
ExperimentDataset sample_and_split(const LibsvmData& data, int total, int train_count,
                                   std::uint64_t seed, double lambda, double R,
                                   const std::string& name = "");

// Hinge+L2 loss for round t from train[t-1], densified to `dimension`.
LossInstance hinge_loss_for_round(const ExperimentDataset& dataset, int round);
std::vector<LossInstance> hinge_losses(const ExperimentDataset& dataset, int horizon);

struct ManifestEntry {
    std::string name;
    std::string path;
    long expected_examples = 0;
};

// JSON manifest mapping dataset name to file path and the expected example
// count used to validate a parsed file.
std::vector<ManifestEntry> load_manifest(const std::string& path);
std::optional<ManifestEntry> find_dataset(const std::vector<ManifestEntry>& manifest,
                                          const std::string& name);

}  // namespace doco
