#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hardylab/errors.hpp"

namespace hardylab::exact {

using Integer = mpz_class;
using Natural = std::uint64_t;

// Exact arbitrary-precision fraction, always stored reduced with positive
// denominator. This is the universal scalar: every comparison made through
// it is a certified exact comparison.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    // Text form: `<sign?><digits>` or `<sign?><digits>/<digits>`.
    // Rejects a zero denominator and anything else that is not exactly this shape.
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;

    // Exact floor/ceil as big integers.
    Integer floor() const;
    Integer ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    // `num/den`, or just `num` when the denominator is 1.
    std::string to_string() const;

    // Decimal rendering with directed rounding, for report tables. The result
    // is a decimal ≤ (round down) or ≥ (round up) the exact value.
    std::string to_decimal_string(unsigned digits, bool round_up) const;

    double to_double() const { return v_.get_d(); }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Exact q^k.
Rational pow_rational(const Rational& q, unsigned long k);

// ⌊n·s⌋ for s > 0, computed entirely in integer arithmetic.
Natural floor_prod(Natural n, const Rational& s);

// Checked narrowing of a nonnegative big integer into Natural.
Natural to_natural(const Integer& n);

}  // namespace hardylab::exact
