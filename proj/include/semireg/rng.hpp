#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace semireg {

// splitmix64 finalizer; full-avalanche mix of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-trial stream: trial i of base seed s is seeded with mix64(mix64(s) ^ mix64(i+1)).
// Same (s, i) gives the same stream regardless of thread scheduling.
inline std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t trial) {
    return mix64(mix64(base) ^ mix64(trial + 1));
}

// mt19937_64 with portable bounded draws (std::uniform_int_distribution is
// implementation-defined; rejection sampling below is not).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    static RngStream for_trial(std::uint64_t base, std::uint64_t trial) {
        return RngStream(derive_stream_seed(base, trial));
    }

    std::uint64_t next_u64() { return engine_(); }

    // uniform integer in [0, bound), bound >= 1
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace semireg
