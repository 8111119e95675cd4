#pragma once

#include <cstdint>

#include "hardylab/rate.hpp"
#include "hardylab/seq.hpp"

namespace hardylab {

// splitmix64. Used both as a mixer for deriving per-trial seeds and as the
// generator itself; fully specified, so streams are identical on every
// platform and independent of evaluation order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}

    // Sub-stream k of a root seed; trials drawing from derived streams can
    // run in any order (or in parallel) with identical results.
    static SampleRng derived(std::uint64_t seed, std::uint64_t k) {
        return SampleRng(splitmix64(seed ^ splitmix64(k)));
    }

    std::uint64_t next() { return state_ = splitmix64(state_), state_; }

    // Uniform-ish integer in [lo, hi]. Modulo bias is irrelevant at the
    // ranges used here (≤ a few thousand).
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

    bool coin() { return next() & 1; }

  private:
    std::uint64_t state_;
};

// Nonzero value ±num/den with 1 ≤ num ≤ num_max, 1 ≤ den ≤ den_max.
exact::Rational random_value(SampleRng& rng, std::uint64_t num_max, std::uint64_t den_max,
                             bool allow_negative = true);

// Finitely supported sequence with indices in [min_index, support_max] and
// nonzero values as above. The number of entries is itself random (≥ 1).
seq::Seq random_seq(SampleRng& rng, exact::Natural support_max, std::uint64_t num_max,
                    std::uint64_t den_max, bool allow_negative = true, exact::Natural min_index = 0);

// Non-increasing nonnegative sequence packed at indices 0..k-1.
seq::Seq random_monotone_seq(SampleRng& rng, exact::Natural max_len, std::uint64_t num_max,
                             std::uint64_t den_max);

// Rate u/v with 1 ≤ v ≤ den_max and value in (0, s_max].
cov::Rate random_rate(SampleRng& rng, std::uint64_t den_max, std::uint64_t s_max = 4);

}  // namespace hardylab
