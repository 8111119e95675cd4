#include "hardylab/cov_verify.hpp"

#include "hardylab/seq_ops.hpp"

namespace hardylab::cov {

CovReport verify_change_of_variable(const seq::Seq& a, const Rate& s, bool require_monotone) {
    if (require_monotone && !a.is_nonincreasing_nonnegative()) {
        throw MonotonicityViolation("verify_change_of_variable: input is not non-increasing nonnegative");
    }
    const SubsampleSum sub = subsampled_power_sum_direct(a, s, 1);
    CovReport r;
    r.lhs = s.value() * sub.value;
    r.rhs = seq::lp_power_sum(a, 1);
    r.slack = r.rhs - r.lhs;
    r.holds = r.lhs <= r.rhs;
    r.n_terms = sub.nonzero_hits;
    return r;
}

}  // namespace hardylab::cov
