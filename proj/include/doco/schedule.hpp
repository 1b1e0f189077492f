#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "doco/config.hpp"

namespace doco {

// T x M matrix of per-round, per-agent delays d_{t,i} in [1, max_delay].
// Feedback generated at round s reaches agent i at the end of round
// s + d_{s,i} - 1, so it is usable from round s + d_{s,i} onwards.
class DelaySchedule {
public:
    DelaySchedule(int horizon, int num_agents, int max_delay, std::vector<int> delays);

    // round in [1,T], agent in [1,M]
    int delay(int round, int agent) const;

    int horizon() const { return horizon_; }
    int num_agents() const { return num_agents_; }
    int max_delay() const { return max_delay_; }

    // FNV-1a over the entries; recorded in run_meta so a run can be audited.
    std::uint64_t hash() const;

    // CSV with header "t,agent,delay", rows in (t, agent) order, all 1-based.
    void to_csv(std::ostream& out) const;
    void save_csv(const std::string& path) const;
    static DelaySchedule from_csv(std::istream& in);
    static DelaySchedule load_csv(const std::string& path);

    bool operator==(const DelaySchedule& other) const = default;

private:
    int horizon_;
    int num_agents_;
    int max_delay_;
    std::vector<int> delays_;  // row-major, (t-1)*M + (i-1)
};

// Each d_{t,i} is drawn independently and uniformly from {1,...,max_delay}
// using the SplitMix64 stream (seed, DelaySchedule), row-major in (t, agent)
// order. Identical seed gives a bitwise-identical schedule.
DelaySchedule generate_delay_schedule(const RunConfig& config);

// Round at whose end the feedback of round s reaches agent i: s + d_{s,i} - 1.
int delivery_round(int s, int agent, const DelaySchedule& schedule);

}  // namespace doco
