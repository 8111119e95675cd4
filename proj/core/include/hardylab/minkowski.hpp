#pragma once

#include "hardylab/breakpoints.hpp"
#include "hardylab/report.hpp"
#include "hardylab/seq.hpp"

namespace hardylab::hardy {

// Certified lower bound for ∫₀¹ (Σ_{n≥1} |a_{⌊ns⌋}|^p)^(1/p) ds.
//
// The integrand is constant between consecutive breakpoints, so on [s_min, 1]
// the integral is a finite exact sum: inner power sum at the interval
// midpoint, lower end of its p-th root enclosure, times the exact width.
// The piece over (0, s_min) is dropped, which only lowers the bound.
Rational minkowski_rhs_lower(const seq::Seq& a, unsigned long p, const Rational& s_min,
                             const Rational& eps);

// One-sided check of the norm-of-integral step
//   (Σ_{n=0}^M |A_n|^p)^(1/p) ≤ ∫₀¹ (Σ_{n≥1} |a_{⌊ns⌋}|^p)^(1/p) ds
// for non-increasing nonnegative a. Verified when the left enclosure's upper
// end is ≤ the certified right lower bound; otherwise Inconclusive with the
// gap (never Violated — the right side is only bounded from below).
Report verify_minkowski_step(const seq::Seq& a, unsigned long p, Natural M, const Rational& s_min,
                             const Rational& eps = Rational(1, 1000000000L));

}  // namespace hardylab::hardy
