#pragma once

#include "hardylab/subsample.hpp"

namespace hardylab::cov {

// Verdict record for the one-sided subsampling estimate
// s·Σ_{n≥1}|a_{⌊ns⌋}| ≤ Σ_n |a_n|.
struct CovReport {
    Rational lhs;       // s · Σ_{n≥1} |a_{⌊ns⌋}|
    Rational rhs;       // Σ_n |a_n|
    Rational slack;     // rhs − lhs
    bool holds = true;  // lhs ≤ rhs, decided exactly
    Natural n_terms = 0;
};

// Evaluates both sides exactly. With require_monotone the input must be
// non-increasing and nonnegative (MonotonicityViolation otherwise) and the
// estimate is a theorem; without it the report may come back with
// holds = false — see fuzz_unrestricted.
CovReport verify_change_of_variable(const seq::Seq& a, const Rate& s, bool require_monotone);

}  // namespace hardylab::cov
