#pragma once

#include <vector>

#include "hardylab/cov_verify.hpp"
#include "hardylab/sampling.hpp"

namespace hardylab::cov {

struct FuzzParams {
    Natural trials = 1000;
    std::uint64_t seed = 0;
    Natural support_max = 16;
    Natural s_denom_max = 20;
    std::uint64_t value_num_max = 8;
    std::uint64_t value_den_max = 8;
};

struct FuzzWitness {
    Natural trial;  // 0 is the built-in probe
    seq::Seq a;
    Rate s;
    CovReport report;
};

// The smallest counterexample to the unrestricted estimate: a = {2 ↦ 1},
// s = 2/3 gives lhs = 4/3 > 1 = rhs (n ∈ {3,4} both land on index 2).
FuzzWitness builtin_probe();

// Samples general (not necessarily monotone) sequences and rates, returning
// every case where the estimate fails. Trial k draws from a generator state
// derived from (seed, k), so the result is order-independent and
// reproducible. The built-in probe is always included as trial 0.
std::vector<FuzzWitness> fuzz_unrestricted(const FuzzParams& params);

}  // namespace hardylab::cov
