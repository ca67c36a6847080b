#pragma once

#include <cstdint>
#include <random>

namespace bhrank {

/// Seedable random source with platform-stable output.
///
/// The engine is std::mt19937_64, whose output sequence is fully specified
/// by the standard. The derived draws below avoid std::uniform_*_distribution
/// on purpose: those are implementation-defined and would break cross-platform
/// reproducibility of generated graphs. Every draw consumes a documented
/// number of raw 64-bit words (uniform_below consumes one word per rejection
/// round, uniform01 exactly one).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased integer in [0, bound), bound > 0. Rejection sampling on the
    /// raw 64-bit stream.
    std::uint64_t uniform_below(std::uint64_t bound) {
        // Reject the low-end excess so that the modulo is exact.
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(uniform_below(span));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace bhrank
