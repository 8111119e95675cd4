#pragma once

#include "hardylab/counting.hpp"
#include "hardylab/seq.hpp"

namespace hardylab::cov {

using exact::Rational;
using seq::Seq;

struct SubsampleSum {
    Rational value;
    Natural nonzero_hits = 0;  // number of n ≥ 1 with a_{⌊ns⌋} ≠ 0
};

// Exclusive upper bound for the subsample index n: every n ≥ this bound has
// ⌊ns⌋ beyond the support of a.
Natural subsample_iteration_bound(const Seq& a, const Rate& s);

// Σ_{n≥1} |a_{⌊ns⌋}|^p by direct iteration over n. The sum is finite because
// ⌊ns⌋ ≤ support_max forces n < (support_max+1)/s.
SubsampleSum subsampled_power_sum_direct(const Seq& a, const Rate& s, unsigned long p = 1);

// The same sum regrouped through the counting function:
// Σ_m |a_m|^p · #I_m(s) over the support of a. Must agree with the direct
// route exactly; the two are kept independent on purpose.
Rational subsampled_power_sum_via_counts(const Seq& a, const Rate& s, unsigned long p = 1);

inline Rational subsampled_sum_direct(const Seq& a, const Rate& s) {
    return subsampled_power_sum_direct(a, s, 1).value;
}
inline Rational subsampled_sum_via_counts(const Seq& a, const Rate& s) {
    return subsampled_power_sum_via_counts(a, s, 1);
}

}  // namespace hardylab::cov
