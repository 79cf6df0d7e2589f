#pragma once

#include <cstdint>
#include <initializer_list>

namespace hamcycle {

// SplitMix64. Used instead of the standard <random> distributions because those
// are implementation-defined; reproducible ensembles need a fully pinned sampler.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n). n must be positive.
    uint64_t below(uint64_t n) {
        const uint64_t threshold = (0 - n) % n;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

private:
    uint64_t state_;
};

inline uint64_t splitmix64_scramble(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Folds a tuple of values into one seed. Instance seeds for the benchmark
// ensembles are derived as mix_seed({master, v, e, instance_id}).
inline uint64_t mix_seed(std::initializer_list<uint64_t> parts) {
    uint64_t h = 0x8BADF00D5EEDull;
    for (uint64_t p : parts) h = splitmix64_scramble(h ^ p);
    return h;
}

}  // namespace hamcycle
