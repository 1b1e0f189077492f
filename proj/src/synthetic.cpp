#include "doco/synthetic.hpp"

#include <cmath>

namespace doco {

namespace {

Vec random_direction(int n, SplitMix64& rng) {
    Vec v(n);
    double norm = 0.0;
    do {
        for (int i = 0; i < n; ++i) v[i] = rng.normal();
        norm = norm2(v);
    } while (norm < 1e-12);
    scale(v, 1.0 / norm);
    return v;
}

}  // namespace

std::vector<LossInstance> make_quadratic_sequence(int n, int horizon, double anchor_radius,
                                                  double lambda, std::uint64_t seed) {
    SplitMix64 rng = make_stream(seed, RngStream::SyntheticLosses);
    std::vector<LossInstance> out;
    out.reserve(horizon);
    for (int t = 0; t < horizon; ++t) {
        Vec dir = random_direction(n, rng);
        // radius^(1/n) scaling makes the anchor uniform in the ball
        double r = anchor_radius * std::pow(rng.uniform_real01(), 1.0 / n);
        scale(dir, r);
        out.push_back(QuadraticLoss{std::move(dir), lambda, 0.0});
    }
    return out;
}

std::vector<LossInstance> make_hinge_sequence(int n, int horizon, double w_scale,
                                              double label_noise, double lambda,
                                              std::uint64_t seed) {
    SplitMix64 rng = make_stream(seed, RngStream::SyntheticLosses);
    Vec planted = random_direction(n, rng);
    std::vector<LossInstance> out;
    out.reserve(horizon);
    for (int t = 0; t < horizon; ++t) {
        Vec w = random_direction(n, rng);
        scale(w, w_scale * (1.0 - rng.uniform_real01() * 0.999));
        double y = dot(w, planted) >= 0.0 ? 1.0 : -1.0;
        if (rng.uniform_real01() < label_noise) y = -y;
        SparseVec features;
        for (int i = 0; i < n; ++i) {
            if (w[i] != 0.0) {
                features.index.push_back(i + 1);
                features.value.push_back(w[i]);
            }
        }
        out.push_back(HingeL2Loss{std::move(features), y, lambda, n});
    }
    return out;
}

double gradient_budget(const std::vector<LossInstance>& losses, double R) {
    double G = 0.0;
    for (const LossInstance& loss : losses) {
        if (const auto* h = std::get_if<HingeL2Loss>(&loss)) {
            G = std::max(G, h->lambda * R + h->features.norm2());
        } else {
            const auto& q = std::get<QuadraticLoss>(loss);
            G = std::max(G, q.lambda * (R + norm2(q.anchor)));
        }
    }
    return G;
}

}  // namespace doco
