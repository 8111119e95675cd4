#pragma once

#include "hardylab/rate.hpp"
#include "hardylab/report.hpp"
#include "hardylab/seq.hpp"

namespace hardylab::cov {

using exact::Rational;
using seq::Seq;

// ∫₀^∞ |a_{⌊x⌋}| dx: each support index contributes one unit-width step.
// Cross-checked internally against the plain absolute sum.
Rational step_integral_full(const Seq& a);

// s·∫₀^∞ |a_{⌊sx⌋}| dx by breakpoint decomposition (⌊sx⌋ jumps at x = m/s).
// The result must equal step_integral_full(a) exactly — this equality is the
// step-function change-of-variable formula, and the operation checks it.
Rational step_integral_scaled(const Seq& a, const Rate& s);

// For non-increasing nonnegative a: Σ_{n≥1} |a_{⌊ns⌋}| ≤ ∫₀^∞ |a_{⌊sx⌋}| dx,
// since right-endpoint sums under-estimate the integral of a non-increasing
// step function. Both sides exact in the report.
Report riemann_vs_integral_check(const Seq& a, const Rate& s);

}  // namespace hardylab::cov
