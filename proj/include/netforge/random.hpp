#pragma once

#include <cstdint>
#include <random>

namespace netforge {

// Reproducible random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard. Bounded draws use our own rejection
// step instead of std::uniform_int_distribution, whose algorithm is
// implementation-defined, so a seed yields the same choices on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // Reject the top partial block of 2^64 so that x % n is unbiased.
        const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - n) % n;
        for (;;) {
            const std::uint64_t x = engine_();
            if (limit == 0 || x < limit) return x % n;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace netforge
