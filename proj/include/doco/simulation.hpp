#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "doco/learners.hpp"
#include "doco/schedule.hpp"

namespace doco {

// Per-agent bookkeeping owned by the engine; learner aggregates live in the
// Learner instances.
struct AgentState {
    int id = 0;
    std::vector<int> received_rounds;  // G_i, kept sorted ascending
};

struct PendingDelivery {
    int deliver_at = 0;  // message becomes visible to decisions at deliver_at + 1
    int origin = 0;
    int target = 0;
    FeedbackMessage message;
};

// Per-round record of a completed run plus delivery accounting.
struct RunTrace {
    std::string loss_sequence_id;
    int horizon = 0;
    int num_agents = 0;
    int max_delay = 0;
    std::vector<int> active_agent;     // [T], 1-based ids
    std::vector<Vec> decisions;        // [T]
    std::vector<double> inst_loss;     // [T]
    std::vector<int> feedback_count;   // [T], |F_t|
    std::vector<double> decide_seconds;  // [T], decision+update wall time (not part of the determinism contract)
    std::vector<double> aggregate_norm;  // [T], active learner's sum norm after deciding
    std::vector<std::vector<int>> feedback_sets;  // [T] when recorded, else empty
    std::int64_t order_violations = 0;   // rounds t with some s in F_t where |F_s| > |F_t|
    std::int64_t vectors_enqueued = 0;   // n-vector payloads placed on the wire
    std::int64_t messages_delivered = 0; // totals T*M once the queue drains

    std::vector<double> cumulative_loss() const;
    double final_cumulative_loss() const;
    // CSV "round,active_agent,feedback_count,inst_loss,cum_loss"
    void to_csv(std::ostream& out) const;
    void save_csv(const std::string& path) const;
    // one decision vector per row, comma separated
    void dump_decisions(std::ostream& out) const;
    void save_decisions(const std::string& path) const;
    // debugging CSV "round,agent,sum_norm,count"
    void save_aggregates(const std::string& path) const;
};

struct EngineOptions {
    bool record_feedback_sets = false;
    bool check_invariants = true;
    // Inner-solver settings for FTDL agents.
    SolveOptions ftdl_solve;
    bool ftdl_require_convergence = true;
};

// Single-threaded deterministic event loop. One agent is active per round;
// feedback of round t reaches agent j at the end of round t + d_{t,j} - 1 and
// is visible to decisions from round t + d_{t,j} onwards.
class SimulationEngine {
public:
    SimulationEngine(RunConfig config, DelaySchedule schedule, std::vector<LossInstance> losses,
                     std::string algo, EngineOptions options = {});

    RunTrace run();

    // Active agent of a round under the configured policy (valid after
    // construction; independent of run()).
    int active_agent(int round) const;

private:
    void deliver_until(int round_end);

    RunConfig config_;
    DelaySchedule schedule_;
    std::vector<LossInstance> losses_;
    std::string algo_;
    EngineOptions options_;
    double lipschitz_G_ = 0.0;
    std::vector<int> activation_;  // precomputed, [T]
    std::vector<std::unique_ptr<Learner>> learners_;
    std::vector<AgentState> agents_;
    std::vector<std::vector<PendingDelivery>> buckets_;  // by deliver_at
    int delivered_upto_ = 0;
    std::int64_t messages_delivered_ = 0;
};

// Convenience wrapper: build the engine (schedule generated from the config)
// and run it.
RunTrace run_simulation(const RunConfig& config, std::vector<LossInstance> losses,
                        const std::string& algo, const EngineOptions& options = {});

}  // namespace doco
