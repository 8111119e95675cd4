#pragma once

#include "hardylab/counting.hpp"
#include "hardylab/report.hpp"
#include "hardylab/seq.hpp"

namespace hardylab::seq {

// Summation-by-parts identity behind the counting-function proof:
//   Σ_m a_m·(#J_{m+1}(s) − #J_m(s)) = Σ_m #J_{m+1}(s)·(a_m − a_{m+1}),
// both sides evaluated independently as finite exact sums. The identity
// itself only needs finite support, but the estimate it feeds needs
// monotone input, so non-monotone sequences are rejected here.
Report abel_step1_check(const Seq& a_monotone, const cov::Rate& s);

// Second summation by parts: Σ_m (m+1)·(a_m − a_{m+1}) = Σ_m a_m.
Report abel_step2_check(const Seq& a_monotone);

}  // namespace hardylab::seq
