#include "hardylab/counting.hpp"

namespace hardylab::cov {

namespace {

using exact::Integer;

Integer floor_quot(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_quot(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

Natural count_I(Natural m, const Rate& s) {
    const Integer u = s.num(), v = s.den();
    const Integer mz(static_cast<unsigned long>(m));
    // n ∈ [m/s, (m+1)/s) ∩ ℕ: first candidate is ⌈mv/u⌉ (the left end is
    // closed), last is the largest n with n·u < (m+1)·v.
    Integer first = ceil_quot(mz * v, u);
    if (first < 1) first = 1;
    const Integer last = ceil_quot((mz + 1) * v, u) - 1;
    if (last < first) return 0;
    return exact::to_natural(last - first + 1);
}

Natural count_J(Natural m, const Rate& s) {
    if (m == 0) return 0;
    const Integer u = s.num(), v = s.den();
    const Integer mv = Integer(static_cast<unsigned long>(m)) * v;
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mv.get_mpz_t(), u.get_mpz_t());
    if (sgn(r) == 0) q -= 1;  // m/s integral: n < m/s is strict
    return exact::to_natural(q);
}

Natural count_I_enumerated(Natural m, const Rate& s) {
    const Integer u = s.num(), v = s.den();
    const Integer stop = (Integer(static_cast<unsigned long>(m)) + 1) * v;
    Natural count = 0;
    for (Integer n = 1; n * u < stop; ++n) {
        if (floor_quot(n * u, v) == static_cast<unsigned long>(m)) ++count;
    }
    return count;
}

Natural count_J_enumerated(Natural m, const Rate& s) {
    const Integer u = s.num(), v = s.den();
    const Integer mv = Integer(static_cast<unsigned long>(m)) * v;
    Natural count = 0;
    for (Integer n = 1; n * u < mv; ++n) ++count;
    return count;
}

}  // namespace hardylab::cov
