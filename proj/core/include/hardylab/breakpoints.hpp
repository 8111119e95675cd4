#pragma once

#include <vector>

#include "hardylab/rational.hpp"

namespace hardylab::hardy {

using exact::Natural;
using exact::Rational;

// The exact piecewise-constant structure of s ↦ (⌊ns⌋ for all n that can
// reach the support): every jump in (s_min, 1] is one of these cuts.
struct Breakpoints {
    Rational s_min;
    std::vector<Rational> cuts;  // strictly increasing, all in (s_min, 1]; 1 is always present
};

// All reduced fractions m/n with 1 ≤ n ≤ n_cap, 1 ≤ m ≤ support_max+1 and
// s_min < m/n ≤ 1, sorted ascending. Requires 0 < s_min < 1 and
// n_cap ≥ ⌈(support_max+1)/s_min⌉ (so that no relevant n is missed).
Breakpoints enumerate_breakpoints(Natural support_max, const Rational& s_min, Natural n_cap);

}  // namespace hardylab::hardy
