#include "hardylab/enclosure.hpp"

#include <algorithm>
#include <cassert>

namespace hardylab::exact {

Enclosure::Enclosure(Rational lower, Rational upper) : lo_(std::move(lower)), hi_(std::move(upper)) {
    if (lo_ > hi_) throw DomainError("enclosure with lower > upper");
}

namespace {

// Smallest t with 2^-t ≤ eps, i.e. 2^t ≥ 1/eps.
unsigned grid_bits_for(const Rational& eps) {
    Integer num = eps.numerator(), den = eps.denominator();
    unsigned t = 0;
    Integer pow2 = 1;
    while (pow2 * num < den) {
        pow2 <<= 1;
        ++t;
    }
    return t;
}

}  // namespace

Enclosure nth_root_enclosure(const Rational& x, unsigned long p, const Rational& eps) {
    if (x.is_negative()) throw DomainError("nth_root_enclosure requires x >= 0");
    if (p == 0) throw DomainError("nth_root_enclosure requires p >= 1");
    if (eps.sign() <= 0) throw DomainError("nth_root_enclosure requires eps > 0");
    if (x.is_zero()) return Enclosure::point(Rational(0));
    if (p == 1) return Enclosure::point(x);

    // Perfect rational p-th power: both components are exact p-th powers.
    Integer root_num, rem_num, root_den, rem_den;
    mpz_rootrem(root_num.get_mpz_t(), rem_num.get_mpz_t(), x.numerator().get_mpz_t(), p);
    if (sgn(rem_num) == 0) {
        mpz_rootrem(root_den.get_mpz_t(), rem_den.get_mpz_t(), x.denominator().get_mpz_t(), p);
        if (sgn(rem_den) == 0) return Enclosure::point(Rational(root_num, root_den));
    }

    // m = ⌊(x·2^(p·t))^(1/p)⌋ gives the enclosure [m, m+1]/2^t of width 2^-t ≤ eps:
    //   m^p ≤ ⌊x·2^(p·t)⌋     ⇒ (m/2^t)^p ≤ x
    //   (m+1)^p ≥ ⌊x·2^(p·t)⌋+1 > x·2^(p·t) ⇒ ((m+1)/2^t)^p > x
    const unsigned t = grid_bits_for(eps);
    Integer scaled = x.numerator() << (p * t);
    Integer y;
    mpz_fdiv_q(y.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
    Integer m;
    mpz_root(m.get_mpz_t(), y.get_mpz_t(), p);
    Integer denom = Integer(1) << t;
    Enclosure result(Rational(m, denom), Rational(m + 1, denom));
    assert(pow_rational(result.lower(), p) <= x && x <= pow_rational(result.upper(), p));
    return result;
}

Enclosure enc_add(const Enclosure& a, const Enclosure& b) {
    return {a.lower() + b.lower(), a.upper() + b.upper()};
}

Enclosure enc_mul(const Enclosure& a, const Enclosure& b) {
    const Rational c[4] = {a.lower() * b.lower(), a.lower() * b.upper(), a.upper() * b.lower(),
                           a.upper() * b.upper()};
    return {std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})};
}

Enclosure enc_scale(const Enclosure& a, const Rational& c) {
    if (c.is_negative()) return {a.upper() * c, a.lower() * c};
    return {a.lower() * c, a.upper() * c};
}

Enclosure enc_reciprocal(const Enclosure& a) {
    if (a.lower().sign() <= 0) throw DomainError("enc_reciprocal requires a strictly positive enclosure");
    return {Rational(1) / a.upper(), Rational(1) / a.lower()};
}

Enclosure enc_div(const Enclosure& a, const Enclosure& b) { return enc_mul(a, enc_reciprocal(b)); }

Enclosure enc_root(const Enclosure& a, unsigned long p, const Rational& eps) {
    if (a.lower().is_negative()) throw DomainError("enc_root requires a nonnegative enclosure");
    Rational lo = nth_root_enclosure(a.lower(), p, eps).lower();
    Rational hi = nth_root_enclosure(a.upper(), p, eps).upper();
    return {lo, hi};
}

DyadicRounder::DyadicRounder(unsigned bits) : bits_(bits), scale_(Integer(1) << bits) {}

Rational DyadicRounder::down(const Rational& q) const {
    Integer num = q.numerator() * scale_;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), q.denominator().get_mpz_t());
    return Rational(f, scale_);
}

Rational DyadicRounder::up(const Rational& q) const {
    Integer num = q.numerator() * scale_;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), q.denominator().get_mpz_t());
    return Rational(c, scale_);
}

Rational DyadicRounder::grid_step() const { return Rational(Integer(1), scale_); }

}  // namespace hardylab::exact
