#pragma once

#include <cstdint>
#include <random>

#include "qshuffle/rational.hpp"

namespace qshuffle {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic RNG. mt19937_64 has a fully specified sequence; bounded
/// draws use rejection sampling (uniform_int_distribution is
/// implementation-defined and would break cross-platform reproducibility).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

    /// independent child generator for a task, stable under scheduling
    Rng child(std::uint64_t task_id) const {
        return Rng(splitmix64(seed_ ^ splitmix64(task_id ^ 0xa02bdbf7bb3c0a7ULL)));
    }

    /// uniform integer in [lo, hi]
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return lo + static_cast<long>(r % span);
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

/// a/b with a uniform in [-bound, bound] \ {0}, b uniform in [1, bound]
inline Rat random_scalar(Rng& rng, long bound) {
    long a = 0;
    while (a == 0) a = rng.uniform(-bound, bound);
    return Rat(a, rng.uniform(1, bound));
}

}  // namespace qshuffle
