#pragma once

#include <cmath>
#include <cstdint>

namespace doco {

// The project-wide pseudorandom generator: SplitMix64 (Steele, Lea, Flood 2014).
// One 64-bit state, one mixing function, identical output on every platform.
// All randomness in a run (delay schedules, activation draws, data sampling,
// synthetic losses) flows through instances of this generator seeded from the
// run seed plus a fixed stream tag, so runs are bit-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform_real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi], inclusive. Unbiased via rejection: draws x
    // below 2^64 mod r are discarded so that x % r is exactly uniform.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t r = static_cast<std::uint64_t>(hi - lo) + 1;
        if (r == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit range
        std::uint64_t threshold = (0 - r) % r;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x < threshold);
        return lo + static_cast<std::int64_t>(x % r);
    }

    // Standard normal via Box-Muller on two uniform draws.
    double normal() {
        double u1, u2;
        do {
            u1 = uniform_real01();
        } while (u1 <= 0.0);
        u2 = uniform_real01();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

private:
    std::uint64_t state_;
};

// Fixed stream tags; a substream is SplitMix64 seeded with the scrambled
// (seed, tag) pair so the streams are decorrelated.
enum class RngStream : std::uint64_t {
    DelaySchedule = 1,
    Activation = 2,
    DataSampling = 3,
    SyntheticLosses = 4,
};

inline SplitMix64 make_stream(std::uint64_t seed, RngStream stream) {
    SplitMix64 scramble(seed ^ (0xd1b54a32d192ed03ULL * static_cast<std::uint64_t>(stream)));
    return SplitMix64(scramble.next_u64());
}

}  // namespace doco
