#include "hardylab/abel.hpp"

namespace hardylab::seq {

namespace {

using exact::Integer;

void require_monotone(const Seq& a, const char* who) {
    if (!a.is_nonincreasing_nonnegative()) {
        throw MonotonicityViolation(std::string(who) + ": input is not non-increasing nonnegative");
    }
}

Report verdict(Rational lhs, Rational rhs) {
    Report r;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.status = r.lhs == r.rhs ? Status::Verified : Status::Violated;
    return r;
}

}  // namespace

Report abel_step1_check(const Seq& a, const cov::Rate& s) {
    require_monotone(a, "abel_step1_check");
    // Monotone support is the prefix 0..K; a_{K+1} = 0 closes the telescope.
    const Natural count = a.support_size();
    Rational lhs(0), rhs(0);
    for (Natural m = 0; m < count; ++m) {
        const Rational am = a.value_at(m);
        const Rational next = m + 1 < count ? a.value_at(m + 1) : Rational(0);
        const Rational j_next{Integer(cov::count_J(m + 1, s))};
        const Rational j_here{Integer(cov::count_J(m, s))};
        lhs += am * (j_next - j_here);
        rhs += j_next * (am - next);
    }
    return verdict(lhs, rhs);
}

Report abel_step2_check(const Seq& a) {
    require_monotone(a, "abel_step2_check");
    const Natural count = a.support_size();
    Rational lhs(0), rhs(0);
    for (Natural m = 0; m < count; ++m) {
        const Rational am = a.value_at(m);
        const Rational next = m + 1 < count ? a.value_at(m + 1) : Rational(0);
        lhs += Rational(Integer(m + 1)) * (am - next);
        rhs += am;
    }
    return verdict(lhs, rhs);
}

}  // namespace hardylab::seq
