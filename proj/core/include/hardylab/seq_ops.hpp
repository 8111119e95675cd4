#pragma once

#include "hardylab/enclosure.hpp"
#include "hardylab/pnorm.hpp"
#include "hardylab/report.hpp"
#include "hardylab/seq.hpp"

namespace hardylab::seq {

using exact::Enclosure;

// Exact Σ_n |a_n|^p over the support. Requires p ≥ 1.
Rational lp_power_sum(const Seq& a, unsigned long p);

// Enclosure of (Σ_n |a_n|^p)^(1/p) of width ≤ eps. Integer p takes the exact
// power-sum route; rational p = u/v encloses each |a_n|^(u/v) term first and
// refines until the requested width is met.
Enclosure lp_norm(const Seq& a, const PNorm& p, const Rational& eps);

// Cesàro means A_n = (a_0 + ... + a_n)/(n+1) for n ≤ n_max, one prefix pass.
Seq cesaro(const Seq& a, Natural n_max);

// Exact upper bound total^p · M^(1-p)/(p-1) for Σ_{n≥M} (total/(n+1))^p,
// by the integral test. Requires total ≥ 0, M ≥ 1, p ≥ 2.
Rational cesaro_tail_bound(const Rational& total, Natural M, unsigned long p);

// The multiset {|a_n|} sorted descending and packed at indices 0, 1, ...
Seq rearrange_nonincreasing(const Seq& a);

// Checks Σ_{k≤n} |a_k| ≤ Σ_{k≤n} a*_k for every n ≤ n_max, where a* is the
// non-increasing rearrangement. Descending order maximizes prefix sums, so
// this holds for every input; a Violated report carries the first failing n.
Report partial_sum_domination_check(const Seq& a, Natural n_max);

}  // namespace hardylab::seq
