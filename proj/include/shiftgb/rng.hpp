#pragma once

#include <cstdint>
#include <random>

namespace shiftgb {

// Seeded RNG wrapper used everywhere randomness is needed.
//
// std::mt19937_64 has a standard-mandated output sequence, and the sampling
// helpers below avoid std::uniform_int_distribution (whose mapping is
// implementation-defined), so the same seed yields the same draws on every
// platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased uniform draw from [0, bound) via rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            return 0;
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold)
                return r % bound;
        }
    }

    // Uniform draw from the inclusive range [lo, hi].
    long long range(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(below(span));
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace shiftgb
