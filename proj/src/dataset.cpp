#include "doco/dataset.hpp"

#include <fstream>

#include <json.hpp>

#include "doco/rng.hpp"

namespace doco {

std::pair<double, double> compute_budget(std::span<const Example> examples, double lambda, double R) {
    double w_max = 0.0;
    for (const Example& ex : examples) w_max = std::max(w_max, ex.features.norm2());
    return {w_max, lambda * R + w_max};
}

ExperimentDataset sample_and_split(const LibsvmData& data, int total, int train_count,
                                   std::uint64_t seed, double lambda, double R,
                                   const std::string& name) {
    if (total <= 0 || train_count <= 0 || train_count > total)
        throw ConfigError("sample_and_split: need 0 < train_count <= total");
    if (static_cast<int>(data.examples.size()) < total)
        throw ConfigError("sample_and_split: dataset has " + std::to_string(data.examples.size()) +
                          " examples, need " + std::to_string(total));

    // partial Fisher-Yates: the first `total` slots end up a uniform sample
    // without replacement
    std::vector<std::int64_t> idx(data.examples.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::int64_t>(i);
    SplitMix64 rng = make_stream(seed, RngStream::DataSampling);
    for (int i = 0; i < total; ++i) {
        std::int64_t j = rng.uniform_int(i, static_cast<std::int64_t>(idx.size()) - 1);
        std::swap(idx[i], idx[j]);
    }

    ExperimentDataset out;
    out.name = name;
    out.dimension = data.dimension;
    out.lambda = lambda;
    out.radius = R;
    out.train.reserve(train_count);
    out.test.reserve(total - train_count);
    for (int i = 0; i < total; ++i) {
        const Example& ex = data.examples[static_cast<std::size_t>(idx[i])];
        if (i < train_count) out.train.push_back(ex);
        else out.test.push_back(ex);
    }

    std::vector<Example> sampled;
    sampled.reserve(total);
    sampled.insert(sampled.end(), out.train.begin(), out.train.end());
    sampled.insert(sampled.end(), out.test.begin(), out.test.end());
    auto [w_max, G] = compute_budget(sampled, lambda, R);
    out.w_max = w_max;
    out.G = G;
    return out;
}

LossInstance hinge_loss_for_round(const ExperimentDataset& dataset, int round) {
    if (round < 1 || round > static_cast<int>(dataset.train.size()))
        throw std::out_of_range("hinge_loss_for_round: round out of range");
    const Example& ex = dataset.train[round - 1];
    return HingeL2Loss{ex.features, ex.label, dataset.lambda, dataset.dimension};
}

std::vector<LossInstance> hinge_losses(const ExperimentDataset& dataset, int horizon) {
    if (horizon > static_cast<int>(dataset.train.size()))
        throw ConfigError("hinge_losses: horizon exceeds training sequence length");
    std::vector<LossInstance> out;
    out.reserve(horizon);
    for (int t = 1; t <= horizon; ++t) out.push_back(hinge_loss_for_round(dataset, t));
    return out;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("manifest " + path + ": " + e.what());
    }
    if (!j.contains("datasets") || !j["datasets"].is_object())
        throw IoError("manifest " + path + ": missing 'datasets' object");
    std::vector<ManifestEntry> out;
    for (const auto& [name, entry] : j["datasets"].items()) {
        ManifestEntry e;
        e.name = name;
        e.path = entry.value("path", "");
        e.expected_examples = entry.value("expected_examples", 0L);
        if (e.path.empty()) throw IoError("manifest " + path + ": dataset '" + name + "' has no path");
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<ManifestEntry> find_dataset(const std::vector<ManifestEntry>& manifest,
                                          const std::string& name) {
    for (const ManifestEntry& e : manifest)
        if (e.name == name) return e;
    return std::nullopt;
}

}  // namespace doco
