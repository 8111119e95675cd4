#pragma once

#include "hardylab/rational.hpp"

namespace hardylab::exact {

// Exact rational interval certified to contain a real value. Endpoints are
// never widened after construction; every operation returns a new enclosure.
class Enclosure {
  public:
    Enclosure(Rational lower, Rational upper);
    static Enclosure point(const Rational& v) { return Enclosure(v, v); }

    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }

  private:
    Rational lo_, hi_;
};

// Certified p-th root: returns [lo, hi] with lo ≥ 0, lo^p ≤ x ≤ hi^p and
// hi − lo ≤ eps. Perfect rational p-th powers come back as point enclosures.
// Requires x ≥ 0, p ≥ 1, eps > 0.
Enclosure nth_root_enclosure(const Rational& x, unsigned long p, const Rational& eps);

// Interval arithmetic, exact endpoints (sum/product denominators grow).
Enclosure enc_add(const Enclosure& a, const Enclosure& b);
Enclosure enc_mul(const Enclosure& a, const Enclosure& b);
Enclosure enc_scale(const Enclosure& a, const Rational& c);
// Requires a.lower() > 0.
Enclosure enc_reciprocal(const Enclosure& a);
Enclosure enc_div(const Enclosure& a, const Enclosure& b);
// Requires a.lower() ≥ 0.
Enclosure enc_root(const Enclosure& a, unsigned long p, const Rational& eps);

// Outward rounding onto the dyadic grid of spacing 2^-bits. Keeping every
// endpoint on one grid bounds denominators during long accumulations.
class DyadicRounder {
  public:
    explicit DyadicRounder(unsigned bits);

    Rational down(const Rational& q) const;
    Rational up(const Rational& q) const;
    Enclosure outward(const Enclosure& e) const { return {down(e.lower()), up(e.upper())}; }
    Rational grid_step() const;
    unsigned bits() const { return bits_; }

  private:
    unsigned bits_;
    Integer scale_;  // 2^bits
};

}  // namespace hardylab::exact
