#include "doco/schedule.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "doco/rng.hpp"

namespace doco {

DelaySchedule::DelaySchedule(int horizon, int num_agents, int max_delay, std::vector<int> delays)
    : horizon_(horizon), num_agents_(num_agents), max_delay_(max_delay), delays_(std::move(delays)) {
    if (horizon_ <= 0 || num_agents_ <= 0 || max_delay_ < 1)
        throw ConfigError("DelaySchedule: horizon, num_agents must be positive and max_delay >= 1");
    if (delays_.size() != static_cast<std::size_t>(horizon_) * static_cast<std::size_t>(num_agents_))
        throw ConfigError("DelaySchedule: delay matrix size does not match T*M");
    for (int d : delays_)
        if (d < 1 || d > max_delay_)
            throw ConfigError("DelaySchedule: entry outside [1, max_delay]");
}

int DelaySchedule::delay(int round, int agent) const {
    if (round < 1 || round > horizon_)
        throw std::out_of_range("DelaySchedule::delay: round out of range");
    if (agent < 1 || agent > num_agents_)
        throw std::out_of_range("DelaySchedule::delay: agent out of range");
    return delays_[static_cast<std::size_t>(round - 1) * num_agents_ + (agent - 1)];
}

std::uint64_t DelaySchedule::hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffULL;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(horizon_));
    mix(static_cast<std::uint64_t>(num_agents_));
    mix(static_cast<std::uint64_t>(max_delay_));
    for (int d : delays_) mix(static_cast<std::uint64_t>(d));
    return h;
}

void DelaySchedule::to_csv(std::ostream& out) const {
    out << "t,agent,delay\n";
    for (int t = 1; t <= horizon_; ++t)
        for (int i = 1; i <= num_agents_; ++i)
            out << t << ',' << i << ',' << delay(t, i) << '\n';
}

void DelaySchedule::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    to_csv(out);
}

DelaySchedule DelaySchedule::from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,agent,delay", 0) != 0)
        throw IoError("DelaySchedule::from_csv: missing 't,agent,delay' header");
    struct Entry {
        int t, i, d;
    };
    std::vector<Entry> entries;
    int t_max = 0, i_max = 0, d_max = 0;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        Entry e{};
        char c1 = 0, c2 = 0;
        std::istringstream row(line);
        if (!(row >> e.t >> c1 >> e.i >> c2 >> e.d) || c1 != ',' || c2 != ',')
            throw IoError("DelaySchedule::from_csv: malformed row at line " + std::to_string(line_no));
        if (e.t < 1 || e.i < 1 || e.d < 1)
            throw IoError("DelaySchedule::from_csv: nonpositive entry at line " + std::to_string(line_no));
        t_max = std::max(t_max, e.t);
        i_max = std::max(i_max, e.i);
        d_max = std::max(d_max, e.d);
        entries.push_back(e);
    }
    if (entries.empty()) throw IoError("DelaySchedule::from_csv: no rows");
    std::vector<int> delays(static_cast<std::size_t>(t_max) * i_max, 0);
    for (const Entry& e : entries)
        delays[static_cast<std::size_t>(e.t - 1) * i_max + (e.i - 1)] = e.d;
    for (int d : delays)
        if (d == 0) throw IoError("DelaySchedule::from_csv: missing (t,agent) entries");
    return DelaySchedule(t_max, i_max, d_max, std::move(delays));
}

DelaySchedule DelaySchedule::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return from_csv(in);
}

DelaySchedule generate_delay_schedule(const RunConfig& config) {
    config.validate();
    SplitMix64 rng = make_stream(config.seed, RngStream::DelaySchedule);
    std::vector<int> delays;
    delays.reserve(static_cast<std::size_t>(config.horizon) * config.num_agents);
    for (int t = 1; t <= config.horizon; ++t)
        for (int i = 1; i <= config.num_agents; ++i)
            delays.push_back(static_cast<int>(rng.uniform_int(1, config.max_delay)));
    return DelaySchedule(config.horizon, config.num_agents, config.max_delay, std::move(delays));
}

int delivery_round(int s, int agent, const DelaySchedule& schedule) {
    return s + schedule.delay(s, agent) - 1;
}

}  // namespace doco
