#pragma once

#include <cstdint>
#include <random>

#include "ogsr/numeric.hpp"

namespace ogsr {

// Deterministic sample source. All randomized checks take an explicit seed
// and route every draw through this class, so a rerun with the same seed
// reproduces the same verdicts and witnesses byte for byte.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }

    // Inclusive range. Modulo projection keeps the draw sequence
    // independent of the standard library's distribution internals.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        if (hi <= lo) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    // Small rational with |numerator| <= num_mag and denominator in [1, den_max].
    Rat rational(std::int64_t num_mag, std::int64_t den_max) {
        const std::int64_t n = int_in(-num_mag, num_mag);
        const std::int64_t d = int_in(1, den_max);
        return Rat(Int(n), Int(d));
    }

    // Uniform-ish big integer in [0, m).
    Int big_below(const Int& m) {
        if (m <= 1) return Int(0);
        Int acc = 0;
        const Int limit = m * m + 1;
        while (acc < limit) acc = (acc << 64) + next();
        return acc % m;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace ogsr
