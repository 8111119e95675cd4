#include "hardylab/seq_ops.hpp"

#include <algorithm>

namespace hardylab::seq {

Rational lp_power_sum(const Seq& a, unsigned long p) {
    if (p < 1) throw DomainError("lp_power_sum requires p >= 1");
    Rational sum(0);
    for (const auto& e : a.entries()) sum += pow_rational(e.value.abs(), p);
    return sum;
}

namespace {

// u-th root of S^v, i.e. S^(v/u), outward from an enclosure of S ≥ 0.
Enclosure rational_root(const Enclosure& s, unsigned long u, unsigned long v, const Rational& eps) {
    Rational lo = exact::nth_root_enclosure(pow_rational(s.lower(), v), u, eps).lower();
    Rational hi = exact::nth_root_enclosure(pow_rational(s.upper(), v), u, eps).upper();
    return {lo, hi};
}

}  // namespace

Enclosure lp_norm(const Seq& a, const PNorm& p, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("lp_norm requires eps > 0");
    if (a.empty()) return Enclosure::point(Rational(0));

    const auto u = exact::to_natural(p.p().numerator());
    const auto v = exact::to_natural(p.p().denominator());
    if (v == 1) {
        return exact::nth_root_enclosure(lp_power_sum(a, u), u, eps);
    }

    // Non-integer p: |a_n|^(u/v) is the v-th root of the exact |a_n|^u.
    // Start from an even split of the budget and refine until the final
    // width (after the closing u-th root) fits.
    Rational term_eps = eps / Rational(4 * (static_cast<long>(a.support_size()) + 1));
    Rational root_eps = eps / Rational(4);
    for (;;) {
        Enclosure sum = Enclosure::point(Rational(0));
        for (const auto& e : a.entries()) {
            sum = enc_add(sum, exact::nth_root_enclosure(pow_rational(e.value.abs(), u), v, term_eps));
        }
        Enclosure norm = rational_root(sum, u, v, root_eps);
        if (norm.width() <= eps) return norm;
        term_eps /= Rational(4);
        root_eps /= Rational(4);
    }
}

Seq cesaro(const Seq& a, Natural n_max) {
    std::vector<Entry> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    Rational prefix(0);
    auto it = a.entries().begin();
    for (Natural n = 0; n <= n_max; ++n) {
        if (it != a.entries().end() && it->index == n) {
            prefix += it->value;
            ++it;
        }
        out.push_back({n, prefix / Rational(static_cast<long>(n) + 1)});
    }
    return Seq::from_entries(std::move(out));
}

Rational cesaro_tail_bound(const Rational& total, Natural M, unsigned long p) {
    if (total.is_negative()) throw DomainError("cesaro_tail_bound requires total >= 0");
    if (M < 1) throw DomainError("cesaro_tail_bound requires M >= 1");
    if (p < 2) throw DomainError("cesaro_tail_bound requires p >= 2");
    exact::Integer m_pow;
    mpz_ui_pow_ui(m_pow.get_mpz_t(), static_cast<unsigned long>(M), p - 1);
    return pow_rational(total, p) / (Rational(exact::Integer(p - 1)) * Rational(m_pow));
}

Seq rearrange_nonincreasing(const Seq& a) {
    std::vector<Rational> values;
    values.reserve(a.support_size());
    for (const auto& e : a.entries()) values.push_back(e.value.abs());
    std::sort(values.begin(), values.end(), [](const Rational& x, const Rational& y) { return y < x; });
    return Seq::dense(values);
}

Report partial_sum_domination_check(const Seq& a, Natural n_max) {
    const Seq star = rearrange_nonincreasing(a);
    Rational prefix_a(0), prefix_star(0);
    auto ia = a.entries().begin();
    auto is = star.entries().begin();
    for (Natural n = 0; n <= n_max; ++n) {
        if (ia != a.entries().end() && ia->index == n) prefix_a += (ia++)->value.abs();
        if (is != star.entries().end() && is->index == n) prefix_star += (is++)->value;
        if (prefix_a > prefix_star) {
            Report r;
            r.status = Status::Violated;
            r.lhs = prefix_a;
            r.rhs = prefix_star;
            r.failure_index = n;
            return r;
        }
    }
    Report r;
    r.status = Status::Verified;
    r.lhs = prefix_a;
    r.rhs = prefix_star;
    return r;
}

}  // namespace hardylab::seq
