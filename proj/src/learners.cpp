#include "doco/learners.hpp"

#include <algorithm>
#include <cmath>

namespace doco {

double dda_eta(int count, double R, double G, int d) {
    if (count < 0) throw ConfigError("dda_eta: count must be >= 0");
    if (d < 1) throw ConfigError("dda_eta: d must be >= 1");
    return R / (std::sqrt(2.0) * G * std::sqrt((1.0 + 2.0 * d) * (count + d + 1.0)));
}

BallDomain unconstrained_wrap(double G, double lambda, int dimension) {
    if (!(G > 0.0) || !(lambda > 0.0)) throw ConfigError("unconstrained_wrap: G and lambda must be positive");
    return BallDomain{dimension, 2.0 * G / lambda};
}

void FtdlLearner::receive(const FeedbackMessage& msg) {
    const auto* loss = std::get_if<LossInstance>(&msg.payload);
    if (!loss) throw ConfigError("FtdlLearner expects full-loss feedback");
    losses_.emplace(msg.origin_round, *loss);
}

Vec FtdlLearner::decide() {
    if (losses_.empty()) return domain_.origin();
    std::vector<LossInstance> ordered;  // std::map iterates in ascending origin round
    ordered.reserve(losses_.size());
    for (const auto& [round, loss] : losses_) ordered.push_back(loss);
    SolveResult r = inner_minimize(ordered, domain_, solve_options_);
    if (require_convergence_ && !r.converged)
        throw SolverError(r.gap_estimate, r.iterations,
                          "ftdl_decide: inner solver did not converge; gap estimate " +
                              std::to_string(r.gap_estimate));
    return std::move(r.x);
}

void AftdlLearner::receive(const FeedbackMessage& msg) {
    const auto* z = std::get_if<SurrogatePayload>(&msg.payload);
    if (!z) throw ConfigError("AftdlLearner expects surrogate-z feedback");
    check_same_dim(z->z, sum_, "AftdlLearner::receive");
    pending_.emplace_back(msg.origin_round, z->z);
}

void AftdlLearner::fold_pending() {
    if (pending_.empty()) return;
    std::sort(pending_.begin(), pending_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [round, z] : pending_) {
        axpy(1.0, z, sum_);
        ++count_;
    }
    pending_.clear();
}

Vec AftdlLearner::decide() {
    fold_pending();
    if (count_ == 0) return domain_.origin();
    return project_ball(scaled(sum_, -1.0 / (lambda_ * count_)), domain_.radius);
}

AggregateSummary AftdlLearner::aggregate() const {
    return {norm2(sum_), feedback_count()};
}

void DdaLearner::receive(const FeedbackMessage& msg) {
    const auto* g = std::get_if<GradientPayload>(&msg.payload);
    if (!g) throw ConfigError("DdaLearner expects gradient feedback");
    check_same_dim(g->grad, sum_, "DdaLearner::receive");
    pending_.emplace_back(msg.origin_round, g->grad);
}

void DdaLearner::fold_pending() {
    if (pending_.empty()) return;
    std::sort(pending_.begin(), pending_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [round, g] : pending_) {
        axpy(1.0, g, sum_);
        ++count_;
    }
    pending_.clear();
}

Vec DdaLearner::decide() {
    fold_pending();
    double eta = dda_eta(count_, domain_.radius, G_, max_delay_);
    if (count_ == 0) return domain_.origin();
    return project_ball(scaled(sum_, -eta), domain_.radius);
}

AggregateSummary DdaLearner::aggregate() const {
    return {norm2(sum_), feedback_count()};
}

std::unique_ptr<Learner> make_learner(std::string_view algo, const BallDomain& domain, double lambda,
                                      double G, int max_delay, const SolveOptions& ftdl_options,
                                      bool ftdl_require_convergence) {
    if (algo == "ftdl") return std::make_unique<FtdlLearner>(domain, ftdl_options, ftdl_require_convergence);
    if (algo == "aftdl") return std::make_unique<AftdlLearner>(domain, lambda);
    if (algo == "dda") {
        if (!(G > 0.0)) throw ConfigError("dda requires a positive gradient bound G");
        return std::make_unique<DdaLearner>(domain, G, max_delay);
    }
    throw ConfigError("unknown learner '" + std::string(algo) + "' (expected ftdl, aftdl or dda)");
}

FeedbackMode feedback_mode_for(std::string_view algo) {
    if (algo == "ftdl") return FeedbackMode::FullLoss;
    if (algo == "aftdl") return FeedbackMode::SurrogateZ;
    if (algo == "dda") return FeedbackMode::Gradient;
    throw ConfigError("unknown learner '" + std::string(algo) + "'");
}

}  // namespace doco
