#pragma once

#include "otkit/rational.hpp"

#include <cstdint>
#include <vector>

namespace otkit {

/// Deterministic splitmix64 generator. All randomized checks draw from this
/// stream so that a recorded seed reproduces a certificate byte for byte on
/// any platform (no libc or <random> distribution is involved).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] (inclusive), unbiased enough for sampling duty.
    long next_in(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    /// Dyadic rational in [lo, hi] with denominator 2^16; exact, so sampled
    /// points can be fed to exact arithmetic.
    Rat next_rat(const Rat& lo, const Rat& hi) {
        Rat t(static_cast<long>(next_u64() >> 48), 65536);
        t.canonicalize();
        return lo + (hi - lo) * t;
    }

    /// Nonzero integer coefficient vector in [-bound, bound]^len.
    std::vector<long> next_coeffs(int len, long bound) {
        std::vector<long> v(static_cast<size_t>(len));
        bool nonzero = false;
        for (auto& c : v) {
            c = next_in(-bound, bound);
            nonzero = nonzero || c != 0;
        }
        if (!nonzero) v[0] = 1;
        return v;
    }

  private:
    std::uint64_t state_;
};

}  // namespace otkit
