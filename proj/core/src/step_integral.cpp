#include "hardylab/step_integral.hpp"

#include "hardylab/seq_ops.hpp"
#include "hardylab/subsample.hpp"

namespace hardylab::cov {

Rational step_integral_full(const Seq& a) {
    Rational sum(0);
    for (const auto& e : a.entries()) {
        const Rational left(exact::Integer(e.index));
        const Rational right(exact::Integer(e.index) + 1);
        sum += e.value.abs() * (right - left);
    }
    if (sum != seq::lp_power_sum(a, 1)) throw Error("step_integral_full: step sum differs from Σ|a_n|");
    return sum;
}

Rational step_integral_scaled(const Seq& a, const Rate& s) {
    Rational sum(0);
    for (const auto& e : a.entries()) {
        const Rational left = Rational(exact::Integer(e.index)) / s.value();
        const Rational right = Rational(exact::Integer(e.index) + 1) / s.value();
        sum += e.value.abs() * s.value() * (right - left);
    }
    if (sum != step_integral_full(a)) {
        throw Error("step_integral_scaled: change-of-variable identity failed");
    }
    return sum;
}

Report riemann_vs_integral_check(const Seq& a, const Rate& s) {
    if (!a.is_nonincreasing_nonnegative()) {
        throw MonotonicityViolation("riemann_vs_integral_check: input is not non-increasing nonnegative");
    }
    Report r;
    r.lhs = subsampled_sum_direct(a, s);
    r.rhs = step_integral_scaled(a, s) / s.value();
    r.status = r.lhs <= r.rhs ? Status::Verified : Status::Violated;
    return r;
}

}  // namespace hardylab::cov
