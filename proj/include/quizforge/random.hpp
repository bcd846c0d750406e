#pragma once

#include <cstdint>

namespace quizforge {

/// Deterministic 64-bit pseudo-random stream. One stream drives a whole
/// compilation run, so the output file is a pure function of (sources, seed).
///
/// The generator is xoshiro256** (Blackman & Vigna) with its state filled by
/// splitmix64 over the seed. Both algorithms are pure integer arithmetic, so
/// identical seeds produce identical draw sequences on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) { reseed(seed); }

    RandomStream(const RandomStream&) = delete;
    RandomStream& operator=(const RandomStream&) = delete;
    RandomStream(RandomStream&&) = default;
    RandomStream& operator=(RandomStream&&) = default;

    void reseed(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform index in [0, n). Plain modular reduction, n >= 1.
    std::uint64_t next_index(std::uint64_t n) { return next_u64() % n; }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [1, n].
    long long next_int1(long long n) {
        return 1 + static_cast<long long>(next_index(static_cast<std::uint64_t>(n)));
    }

private:
    std::uint64_t state_[4];
};

} // namespace quizforge
