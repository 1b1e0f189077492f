#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doco/feedback.hpp"
#include "doco/solver.hpp"

namespace doco {

// DDA step size: R / (sqrt(2) * G * sqrt((1 + 2d) * (count + d + 1))),
// strictly decreasing in count.
double dda_eta(int count, double R, double G, int d);

// Ball that is guaranteed to contain the optimum of any sum of losses that
// are lambda-strongly convex and G-Lipschitz at the origin: radius 2G/lambda.
BallDomain unconstrained_wrap(double G, double lambda, int dimension);

// Debug summary dumped per round as "round,agent,sum_norm,count".
struct AggregateSummary {
    double sum_norm = 0.0;
    int count = 0;
};

// One agent's decision rule. receive() only buffers; all aggregate folding
// happens inside decide() so buffered messages can be folded in ascending
// origin-round order regardless of delivery order.
class Learner {
public:
    virtual ~Learner() = default;
    virtual void receive(const FeedbackMessage& msg) = 0;
    virtual Vec decide() = 0;
    virtual std::string_view name() const = 0;
    virtual FeedbackMode expected_mode() const = 0;
    virtual int feedback_count() const = 0;
    virtual AggregateSummary aggregate() const = 0;
};

// Follow-the-delayed-leader: minimizes the sum of all received losses over
// the domain. Quadratic-only feedback sets short-circuit to the closed form;
// otherwise the certified inner solver runs. Empty feedback plays the origin.
class FtdlLearner : public Learner {
public:
    FtdlLearner(BallDomain domain, SolveOptions solve_options = {}, bool require_convergence = true)
        : domain_(std::move(domain)), solve_options_(solve_options),
          require_convergence_(require_convergence) {}

    void receive(const FeedbackMessage& msg) override;
    Vec decide() override;
    std::string_view name() const override { return "ftdl"; }
    FeedbackMode expected_mode() const override { return FeedbackMode::FullLoss; }
    int feedback_count() const override { return static_cast<int>(losses_.size()); }
    AggregateSummary aggregate() const override { return {0.0, feedback_count()}; }

private:
    BallDomain domain_;
    SolveOptions solve_options_;
    bool require_convergence_;
    std::map<int, LossInstance> losses_;  // keyed by origin round
};

// Approximate FTDL: feedback is the surrogate vector z_s, the decision is the
// ball projection of -S/(lambda*|F_t|) where S is the running sum of received
// z_s. The decision depends on the feedback set only through S and |F_t|.
class AftdlLearner : public Learner {
public:
    AftdlLearner(BallDomain domain, double lambda)
        : domain_(std::move(domain)), lambda_(lambda), sum_(zeros(domain_.dimension)) {}

    void receive(const FeedbackMessage& msg) override;
    Vec decide() override;
    std::string_view name() const override { return "aftdl"; }
    FeedbackMode expected_mode() const override { return FeedbackMode::SurrogateZ; }
    int feedback_count() const override { return count_ + static_cast<int>(pending_.size()); }
    AggregateSummary aggregate() const override;

    const Vec& surrogate_sum() const { return sum_; }

private:
    void fold_pending();

    BallDomain domain_;
    double lambda_;
    Vec sum_;
    int count_ = 0;
    std::vector<std::pair<int, Vec>> pending_;
};

// Delayed dual averaging baseline with R(x) = ||x||^2/2 and the delay-aware
// step size dda_eta: decision = project(-eta_t * sum of received gradients).
class DdaLearner : public Learner {
public:
    DdaLearner(BallDomain domain, double G, int max_delay)
        : domain_(std::move(domain)), G_(G), max_delay_(max_delay), sum_(zeros(domain_.dimension)) {}

    void receive(const FeedbackMessage& msg) override;
    Vec decide() override;
    std::string_view name() const override { return "dda"; }
    FeedbackMode expected_mode() const override { return FeedbackMode::Gradient; }
    int feedback_count() const override { return count_ + static_cast<int>(pending_.size()); }
    AggregateSummary aggregate() const override;

private:
    void fold_pending();

    BallDomain domain_;
    double G_;
    int max_delay_;
    Vec sum_;
    int count_ = 0;
    std::vector<std::pair<int, Vec>> pending_;
};

// algo is one of "ftdl", "aftdl", "dda". G is required by DDA's step size.
std::unique_ptr<Learner> make_learner(std::string_view algo, const BallDomain& domain, double lambda,
                                      double G, int max_delay, const SolveOptions& ftdl_options = {},
                                      bool ftdl_require_convergence = true);

FeedbackMode feedback_mode_for(std::string_view algo);

}  // namespace doco
