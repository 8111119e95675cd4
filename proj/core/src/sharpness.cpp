#include "hardylab/sharpness.hpp"

#include <set>

namespace hardylab::hardy {

namespace {

using exact::DyadicRounder;
using exact::Integer;

// |e|^p for a nonnegative enclosure, rounded outward.
Enclosure pow_outward(const Enclosure& e, unsigned long p, const DyadicRounder& grid) {
    return grid.outward({pow_rational(e.lower(), p), pow_rational(e.upper(), p)});
}

}  // namespace

std::vector<SweepRow> sharpness_sweep(unsigned long p, const std::vector<Rational>& eps_list,
                                      Natural N, const Rational& prec) {
    if (p < 2) throw DomainError("sharpness_sweep requires integer p >= 2");
    if (prec.sign() <= 0) throw DomainError("sharpness_sweep requires prec > 0");
    {
        std::set<Rational> uniq(eps_list.begin(), eps_list.end());
        if (uniq.size() != eps_list.size()) throw DomainError("eps values must be distinct");
        for (const auto& e : eps_list)
            if (e.sign() <= 0) throw DomainError("eps values must be positive");
    }

    // Grid a few bits finer than the requested precision; per-term widths
    // stay relative, so positive sums keep roughly the same relative width.
    unsigned bits = 8;
    while (pow_rational(Rational(1, 2), bits) > prec) ++bits;
    const DyadicRounder grid(bits + 8);
    const Rational step = grid.grid_step();

    std::vector<SweepRow> rows;
    rows.reserve(eps_list.size());
    for (const Rational& eps : eps_list) {
        // a_n = (n+1)^(-q), q = 1/p + eps = alpha/beta > 0.
        const Rational q = Rational(1, static_cast<long>(p)) + eps;
        const auto alpha = exact::to_natural(q.numerator());
        const auto beta = exact::to_natural(q.denominator());

        Enclosure prefix = Enclosure::point(Rational(0));
        Enclosure sum_a = Enclosure::point(Rational(0));
        Enclosure sum_means = Enclosure::point(Rational(0));
        for (Natural n = 0; n <= N; ++n) {
            Rational base{Integer(n) + 1};
            Enclosure growth = exact::nth_root_enclosure(pow_rational(base, alpha), beta, step);
            Enclosure a_n = grid.outward(enc_reciprocal(growth));
            prefix = grid.outward(enc_add(prefix, a_n));
            Enclosure mean = grid.outward(enc_scale(prefix, Rational(1) / base));
            sum_a = enc_add(sum_a, pow_outward(a_n, p, grid));
            sum_means = enc_add(sum_means, pow_outward(mean, p, grid));
        }
        const Enclosure ratio =
            enc_div(enc_root(sum_means, p, prec), enc_root(sum_a, p, prec));
        rows.push_back({eps, N, ratio});
    }
    return rows;
}

}  // namespace hardylab::hardy
