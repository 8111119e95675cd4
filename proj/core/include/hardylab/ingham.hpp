#pragma once

#include "hardylab/seq.hpp"

namespace hardylab::hardy {

// Exact ∫₀¹ a_{⌊(n+1)s⌋} ds (signed values, not absolute). The integrand is
// constant on [k/(n+1), (k+1)/(n+1)), so the integral is evaluated piece by
// piece; the operation then asserts the result equals the Cesàro mean A_n —
// that exact identity is the point of the representation.
exact::Rational ingham_integral(const seq::Seq& a, exact::Natural n);

}  // namespace hardylab::hardy
