#pragma once

#include <variant>

#include "doco/config.hpp"
#include "doco/losses.hpp"

namespace doco {

struct SurrogatePayload {
    Vec z;  // grad - lambda * x, taken at the origin round's decision
};

struct GradientPayload {
    Vec grad;
};

// Feedback generated at origin_round; the payload variant matches the run's
// FeedbackMode.
struct FeedbackMessage {
    int origin_round = 0;
    std::variant<LossInstance, SurrogatePayload, GradientPayload> payload;

    FeedbackMode mode() const {
        switch (payload.index()) {
            case 0: return FeedbackMode::FullLoss;
            case 1: return FeedbackMode::SurrogateZ;
            default: return FeedbackMode::Gradient;
        }
    }
};

// Build the round-t feedback. grad must be loss_gradient(loss, x).
inline FeedbackMessage feedback_for_mode(FeedbackMode mode, const LossInstance& loss, const Vec& x,
                                         const Vec& grad, double lambda, int origin_round) {
    switch (mode) {
        case FeedbackMode::FullLoss: return {origin_round, loss};
        case FeedbackMode::SurrogateZ: return {origin_round, SurrogatePayload{surrogate_vector(grad, x, lambda)}};
        case FeedbackMode::Gradient: return {origin_round, GradientPayload{grad}};
    }
    throw ConfigError("feedback_for_mode: unknown mode");
}

}  // namespace doco
