#pragma once

// Small deterministic PRNG (splitmix64). Standard-library distributions are
// implementation defined; this keeps seeded runs byte-identical everywhere.

#include <cstdint>

#include "gzodd/rational.hpp"

namespace gzodd {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    bool coin() { return next() & 1; }

    Rational rational(long long num_abs, long long den_max) {
        return Rational(uniform(-num_abs, num_abs), uniform(1, den_max));
    }

private:
    std::uint64_t state_;
};

}  // namespace gzodd
