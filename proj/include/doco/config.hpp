#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "doco/domain.hpp"
#include "doco/errors.hpp"

namespace doco {

// How the single active agent of each round is chosen.
enum class ActivationPolicy { RoundRobin, UniformRandom, ExplicitSequence };

// What a feedback message carries: the full loss (FTDL), the surrogate
// vector z_s (A-FTDL), or the raw gradient at the decision (DDA).
enum class FeedbackMode { FullLoss, SurrogateZ, Gradient };

// Rounds are 1..horizon and agent ids 1..num_agents throughout the public API.
struct RunConfig {
    int num_agents = 1;
    int horizon = 1;
    int max_delay = 1;
    double lambda = 0.01;
    BallDomain domain{1, 1.0};
    std::uint64_t seed = 0;
    ActivationPolicy activation = ActivationPolicy::RoundRobin;
    std::vector<int> activation_sequence;  // used when activation == ExplicitSequence
    FeedbackMode feedback_mode = FeedbackMode::FullLoss;
    // Known uniform gradient-norm bound over the domain; 0 means unknown
    // (disables the ||z_s|| <= G + lambda*R delivery check).
    double lipschitz_G = 0.0;

    void validate() const {
        if (num_agents <= 0) throw ConfigError("RunConfig: num_agents must be positive");
        if (horizon <= 0) throw ConfigError("RunConfig: horizon must be positive");
        if (max_delay < 1) throw ConfigError("RunConfig: max_delay must be >= 1");
        if (!(lambda > 0.0)) throw ConfigError("RunConfig: lambda must be positive");
        domain.validate();
        if (activation == ActivationPolicy::ExplicitSequence) {
            if (static_cast<int>(activation_sequence.size()) != horizon)
                throw ConfigError("RunConfig: explicit activation sequence must have length T");
            for (int a : activation_sequence)
                if (a < 1 || a > num_agents)
                    throw ConfigError("RunConfig: activation sequence entries must be in [1,M]");
        }
    }
};

inline std::string to_string(ActivationPolicy p) {
    switch (p) {
        case ActivationPolicy::RoundRobin: return "round-robin";
        case ActivationPolicy::UniformRandom: return "uniform-random";
        case ActivationPolicy::ExplicitSequence: return "explicit-sequence";
    }
    return "?";
}

inline std::string to_string(FeedbackMode m) {
    switch (m) {
        case FeedbackMode::FullLoss: return "full-loss";
        case FeedbackMode::SurrogateZ: return "surrogate-z";
        case FeedbackMode::Gradient: return "gradient";
    }
    return "?";
}

}  // namespace doco
