#include "doco/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "doco/rng.hpp"

namespace doco {

std::vector<double> RunTrace::cumulative_loss() const {
    std::vector<double> cum(inst_loss.size());
    double s = 0.0;
    for (std::size_t i = 0; i < inst_loss.size(); ++i) {
        s += inst_loss[i];
        cum[i] = s;
    }
    return cum;
}

double RunTrace::final_cumulative_loss() const {
    double s = 0.0;
    for (double v : inst_loss) s += v;
    return s;
}

void RunTrace::to_csv(std::ostream& out) const {
    out << "round,active_agent,feedback_count,inst_loss,cum_loss\n";
    out.precision(17);
    double cum = 0.0;
    for (int t = 1; t <= horizon; ++t) {
        cum += inst_loss[t - 1];
        out << t << ',' << active_agent[t - 1] << ',' << feedback_count[t - 1] << ','
            << inst_loss[t - 1] << ',' << cum << '\n';
    }
}

void RunTrace::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    to_csv(out);
}

void RunTrace::dump_decisions(std::ostream& out) const {
    out.precision(17);
    for (const Vec& x : decisions) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) out << ',';
            out << x[i];
        }
        out << '\n';
    }
}

void RunTrace::save_decisions(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    dump_decisions(out);
}

void RunTrace::save_aggregates(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "round,agent,sum_norm,count\n";
    out.precision(17);
    for (int t = 1; t <= horizon; ++t)
        out << t << ',' << active_agent[t - 1] << ',' << aggregate_norm[t - 1] << ','
            << feedback_count[t - 1] << '\n';
}

SimulationEngine::SimulationEngine(RunConfig config, DelaySchedule schedule,
                                   std::vector<LossInstance> losses, std::string algo,
                                   EngineOptions options)
    : config_(std::move(config)), schedule_(std::move(schedule)), losses_(std::move(losses)),
      algo_(std::move(algo)), options_(options) {
    config_.validate();
    if (schedule_.horizon() != config_.horizon || schedule_.num_agents() != config_.num_agents)
        throw ConfigError("SimulationEngine: schedule does not match config");
    if (schedule_.max_delay() > config_.max_delay)
        throw ConfigError("SimulationEngine: schedule exceeds configured max delay");
    if (static_cast<int>(losses_.size()) != config_.horizon)
        throw ConfigError("SimulationEngine: loss sequence length must equal horizon");
    if (config_.feedback_mode != feedback_mode_for(algo_))
        throw ConfigError("SimulationEngine: feedback_mode does not match learner '" + algo_ + "'");
    for (const LossInstance& loss : losses_) {
        if (loss_dimension(loss) != config_.domain.dimension)
            throw ConfigError("SimulationEngine: loss dimension does not match domain");
        if (loss_strong_convexity(loss) + 1e-12 < config_.lambda)
            throw ConfigError("SimulationEngine: loss strong convexity below configured lambda");
    }
    lipschitz_G_ = config_.lipschitz_G;

    activation_.resize(config_.horizon);
    switch (config_.activation) {
        case ActivationPolicy::RoundRobin:
            for (int t = 1; t <= config_.horizon; ++t) activation_[t - 1] = (t - 1) % config_.num_agents + 1;
            break;
        case ActivationPolicy::UniformRandom: {
            SplitMix64 rng = make_stream(config_.seed, RngStream::Activation);
            for (int t = 1; t <= config_.horizon; ++t)
                activation_[t - 1] = static_cast<int>(rng.uniform_int(1, config_.num_agents));
            break;
        }
        case ActivationPolicy::ExplicitSequence:
            activation_ = config_.activation_sequence;
            break;
    }

    for (int i = 1; i <= config_.num_agents; ++i) {
        learners_.push_back(make_learner(algo_, config_.domain, config_.lambda, lipschitz_G_,
                                         config_.max_delay, options_.ftdl_solve,
                                         options_.ftdl_require_convergence));
        agents_.push_back(AgentState{i, {}});
    }
    // deliver_at never exceeds T + d - 1
    buckets_.resize(static_cast<std::size_t>(config_.horizon + config_.max_delay));
}

int SimulationEngine::active_agent(int round) const {
    if (round < 1 || round > config_.horizon) throw std::out_of_range("active_agent: round out of range");
    return activation_[round - 1];
}

void SimulationEngine::deliver_until(int round_end) {
    for (int r = delivered_upto_ + 1; r <= round_end; ++r) {
        if (r >= static_cast<int>(buckets_.size())) break;
        for (PendingDelivery& pd : buckets_[r]) {
            AgentState& st = agents_[pd.target - 1];
            auto pos = std::lower_bound(st.received_rounds.begin(), st.received_rounds.end(), pd.origin);
            st.received_rounds.insert(pos, pd.origin);
            learners_[pd.target - 1]->receive(pd.message);
            ++messages_delivered_;
        }
        buckets_[r].clear();
    }
    delivered_upto_ = std::max(delivered_upto_, round_end);
}

RunTrace SimulationEngine::run() {
    const int T = config_.horizon;
    const int M = config_.num_agents;
    const double R = config_.domain.radius;

    RunTrace trace;
    trace.horizon = T;
    trace.num_agents = M;
    trace.max_delay = config_.max_delay;
    trace.active_agent.resize(T);
    trace.decisions.resize(T);
    trace.inst_loss.resize(T);
    trace.feedback_count.resize(T);
    trace.decide_seconds.resize(T);
    trace.aggregate_norm.resize(T);
    if (options_.record_feedback_sets) trace.feedback_sets.resize(T);

    for (int t = 1; t <= T; ++t) {
        // messages delivered at the end of rounds <= t-1 are visible now
        deliver_until(t - 1);

        int agent = activation_[t - 1];
        const AgentState& st = agents_[agent - 1];
        const std::vector<int>& feedback_set = st.received_rounds;

        if (options_.check_invariants) {
            // {1..t-d} subset of F_t subset of {1..t-1}
            int full_prefix = std::max(0, t - config_.max_delay);
            if (static_cast<int>(feedback_set.size()) < full_prefix)
                throw std::logic_error("feedback-set invariant violated: |F_t| < t - d");
            for (int k = 0; k < full_prefix; ++k)
                if (feedback_set[k] != k + 1)
                    throw std::logic_error("feedback-set invariant violated: missing round " +
                                           std::to_string(k + 1) + " at t=" + std::to_string(t));
            if (!feedback_set.empty() && feedback_set.back() > t - 1)
                throw std::logic_error("feedback-set invariant violated: future round in F_t");
        }

        int count = static_cast<int>(feedback_set.size());
        for (int s : feedback_set)
            if (trace.feedback_count[s - 1] > count) {
                ++trace.order_violations;
                break;
            }

        auto t0 = std::chrono::steady_clock::now();
        Vec x = learners_[agent - 1]->decide();
        auto t1 = std::chrono::steady_clock::now();

        if (norm2(x) > R + 1e-9)
            throw std::logic_error("decision outside the domain at round " + std::to_string(t));

        const LossInstance& loss = losses_[t - 1];
        double fx = loss_value(loss, x);
        Vec grad = loss_gradient(loss, x);
        FeedbackMessage msg =
            feedback_for_mode(config_.feedback_mode, loss, x, grad, config_.lambda, t);

        if (config_.feedback_mode == FeedbackMode::SurrogateZ && lipschitz_G_ > 0.0) {
            double zn = norm2(std::get<SurrogatePayload>(msg.payload).z);
            if (zn > lipschitz_G_ + config_.lambda * R + 1e-9)
                throw std::logic_error("surrogate vector exceeds G + lambda*R at round " +
                                       std::to_string(t));
        }

        for (int j = 1; j <= M; ++j) {
            int at = t + schedule_.delay(t, j) - 1;
            buckets_[at].push_back(PendingDelivery{at, t, j, msg});
            if (config_.feedback_mode != FeedbackMode::FullLoss) ++trace.vectors_enqueued;
        }

        trace.active_agent[t - 1] = agent;
        trace.feedback_count[t - 1] = count;
        trace.aggregate_norm[t - 1] = learners_[agent - 1]->aggregate().sum_norm;
        trace.inst_loss[t - 1] = fx;
        trace.decide_seconds[t - 1] = std::chrono::duration<double>(t1 - t0).count();
        if (options_.record_feedback_sets) trace.feedback_sets[t - 1] = feedback_set;
        trace.decisions[t - 1] = std::move(x);
    }

    // messages addressed past the horizon are still delivered and accounted,
    // but no further decision reads them
    deliver_until(T + config_.max_delay);
    trace.messages_delivered = messages_delivered_;
    if (options_.check_invariants && messages_delivered_ != static_cast<std::int64_t>(T) * M)
        throw std::logic_error("delivery accounting mismatch: expected T*M messages");
    return trace;
}

RunTrace run_simulation(const RunConfig& config, std::vector<LossInstance> losses,
                        const std::string& algo, const EngineOptions& options) {
    SimulationEngine engine(config, generate_delay_schedule(config), std::move(losses), algo, options);
    return engine.run();
}

}  // namespace doco
