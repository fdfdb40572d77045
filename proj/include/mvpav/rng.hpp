#pragma once

#include <cstdint>

#include "mvpav/rational.hpp"

namespace mvpav {

/// Small deterministic PRNG (splitmix64). Self-contained so that seeded
/// suites produce identical streams on every platform and build.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n); n > 0. Rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    /// Derives an independent stream; used to decorrelate sub-suites.
    Rng fork() { return Rng(next() ^ 0xd1b54a32d192ed03ULL); }

  private:
    std::uint64_t state_;
};

/// Random rational in [0,1]: denominator uniform in 1..max_den, numerator
/// uniform in 0..denominator.
Rational01 random_rational01(Rng& rng, int max_den = 1000);

}  // namespace mvpav
