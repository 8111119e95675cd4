#include "hardylab/subsample.hpp"

namespace hardylab::cov {

Natural subsample_iteration_bound(const Seq& a, const Rate& s) {
    const auto smax = a.support_max();
    if (!smax) return 1;  // no n ≥ 1 can hit an empty support
    // n·u < (smax+1)·v  ⇔  n ≤ ⌈(smax+1)·v/u⌉ − 1; the bound is one past that.
    exact::Integer top = (exact::Integer(static_cast<unsigned long>(*smax)) + 1) * s.den();
    exact::Integer bound;
    mpz_cdiv_q(bound.get_mpz_t(), top.get_mpz_t(), s.num().get_mpz_t());
    return exact::to_natural(bound);
}

SubsampleSum subsampled_power_sum_direct(const Seq& a, const Rate& s, unsigned long p) {
    if (p < 1) throw DomainError("subsampled power sum requires p >= 1");
    SubsampleSum out{Rational(0), 0};
    const Natural bound = subsample_iteration_bound(a, s);
    for (Natural n = 1; n < bound; ++n) {
        const Rational term = a.abs_at(exact::floor_prod(n, s.value()));
        if (!term.is_zero()) {
            out.value += pow_rational(term, p);
            ++out.nonzero_hits;
        }
    }
    return out;
}

Rational subsampled_power_sum_via_counts(const Seq& a, const Rate& s, unsigned long p) {
    if (p < 1) throw DomainError("subsampled power sum requires p >= 1");
    Rational sum(0);
    for (const auto& e : a.entries()) {
        const Natural hits = count_I(e.index, s);
        if (hits) sum += pow_rational(e.value.abs(), p) * Rational(exact::Integer(hits));
    }
    return sum;
}

}  // namespace hardylab::cov
