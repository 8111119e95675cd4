#include "hardylab/hardy.hpp"

#include "hardylab/seq_ops.hpp"

namespace hardylab::hardy {

Rational hardy_constant(const seq::PNorm& p) { return p.conjugate(); }

HardyReport verify_hardy(const Seq& a, unsigned long p, Natural M) {
    if (p < 2) throw DomainError("verify_hardy requires integer p >= 2");
    const Natural needed = a.support_max() ? *a.support_max() + 1 : 0;
    if (M < needed) throw DomainError("verify_hardy requires M >= support_max + 1");

    HardyReport rep;
    rep.M = M;

    Rational head(0);
    if (M > 0) {
        const Seq means = seq::cesaro(a, M - 1);
        head = seq::lp_power_sum(means, p);
        rep.tail_bound = seq::cesaro_tail_bound(seq::lp_power_sum(a, 1), M, p);
    } else {
        rep.tail_bound = Rational(0);  // only reachable for the zero sequence
    }
    rep.lhs_power_sum = head + rep.tail_bound;

    const seq::PNorm pn{Rational(exact::Integer(p))};
    rep.rhs_power_sum = pow_rational(hardy_constant(pn), p) * seq::lp_power_sum(a, p);
    rep.holds = rep.lhs_power_sum <= rep.rhs_power_sum;
    return rep;
}

}  // namespace hardylab::hardy
