#include "hardylab/minkowski.hpp"

#include "hardylab/enclosure.hpp"
#include "hardylab/seq_ops.hpp"
#include "hardylab/subsample.hpp"

namespace hardylab::hardy {

Rational minkowski_rhs_lower(const seq::Seq& a, unsigned long p, const Rational& s_min,
                             const Rational& eps) {
    if (s_min.sign() <= 0 || s_min >= Rational(1)) throw DomainError("s_min must lie in (0, 1)");
    if (p < 1) throw DomainError("minkowski_rhs_lower requires p >= 1");
    if (a.empty()) return Rational(0);

    const Natural smax = *a.support_max();
    const Natural n_cap = exact::to_natural(((Rational(exact::Integer(smax)) + Rational(1)) / s_min).ceil());
    const Breakpoints bp = enumerate_breakpoints(smax, s_min, n_cap);

    Rational bound(0);
    Rational left = s_min;
    for (const Rational& cut : bp.cuts) {
        const Rational mid = (left + cut) / Rational(2);
        const Rational inner = cov::subsampled_power_sum_via_counts(a, cov::Rate(mid), p);
        if (!inner.is_zero()) {
            const Rational root = exact::nth_root_enclosure(inner, p, eps).lower();
            bound += root * (cut - left);
        }
        left = cut;
    }
    return bound;
}

Report verify_minkowski_step(const seq::Seq& a, unsigned long p, Natural M, const Rational& s_min,
                             const Rational& eps) {
    if (!a.is_nonincreasing_nonnegative()) {
        throw MonotonicityViolation("verify_minkowski_step: input is not non-increasing nonnegative");
    }
    const seq::PNorm pn{Rational(exact::Integer(p))};
    const exact::Enclosure lhs = seq::lp_norm(seq::cesaro(a, M), pn, eps);
    const Rational rhs_lower = minkowski_rhs_lower(a, p, s_min, eps);

    Report r;
    r.lhs = lhs.upper();
    r.rhs = rhs_lower;
    if (lhs.upper() <= rhs_lower) {
        r.status = Status::Verified;
    } else {
        r.status = Status::Inconclusive;
        r.gap = lhs.upper() - rhs_lower;
        r.note = "one-sided bound too coarse; retry with smaller s_min";
    }
    return r;
}

}  // namespace hardylab::hardy
