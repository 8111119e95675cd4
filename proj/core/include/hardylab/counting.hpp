#pragma once

#include "hardylab/rate.hpp"

namespace hardylab::cov {

using exact::Natural;

// #I_m(s) = #{n ≥ 1 : ⌊ns⌋ = m} = #([m/s, (m+1)/s) ∩ ℕ), exact.
Natural count_I(Natural m, const Rate& s);

// #J_m(s) = #([0, m/s) ∩ ℕ) with ℕ the positive integers. Closed form:
// 0 for m = 0; m/s − 1 when m/s is an integer (the interval is open on the
// right); ⌊m/s⌋ otherwise.
Natural count_J(Natural m, const Rate& s);

// Independent enumeration routes for the same counts. These iterate n
// directly and exist to be checked against the closed forms.
Natural count_I_enumerated(Natural m, const Rate& s);
Natural count_J_enumerated(Natural m, const Rate& s);

}  // namespace hardylab::cov
