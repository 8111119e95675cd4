#include "hardylab/rational.hpp"

#include <cctype>
#include <ostream>

namespace hardylab::exact {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { return ParseError("not a rational: '" + std::string(text) + "'"); };
    std::string_view rest = text;
    std::string num_str;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        if (rest.front() == '-') num_str.push_back('-');
        rest.remove_prefix(1);
    }
    auto take_digits = [&](std::string& out) {
        std::size_t i = 0;
        while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
        if (i == 0) throw bad();
        out.append(rest.substr(0, i));
        rest.remove_prefix(i);
    };
    take_digits(num_str);
    std::string den_str = "1";
    if (!rest.empty()) {
        if (rest.front() != '/') throw bad();
        rest.remove_prefix(1);
        den_str.clear();
        take_digits(den_str);
        if (!rest.empty()) throw bad();
    }
    Integer num(num_str, 10), den(den_str, 10);
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational Rational::abs() const {
    Rational r = *this;
    r.v_ = ::abs(v_);
    return r;
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal_string(unsigned digits, bool round_up) const {
    // Scale by 10^digits, round in the requested direction, then re-insert the point.
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer num = numerator() * scale;
    Integer scaled;
    if (round_up) {
        mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), denominator().get_mpz_t());
    } else {
        mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), denominator().get_mpz_t());
    }
    bool neg = sgn(scaled) < 0;
    Integer mag = ::abs(scaled);
    std::string s = mag.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, digits ? "." : "");
    return neg ? "-" + s : s;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational pow_rational(const Rational& q, unsigned long k) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), k);
    return Rational(num, den);  // already coprime: powers of coprime integers
}

Natural floor_prod(Natural n, const Rational& s) {
    if (s.sign() <= 0) throw DomainError("floor_prod requires s > 0");
    Integer t = Integer(mpz_class(static_cast<unsigned long>(n))) * s.numerator();
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), s.denominator().get_mpz_t());
    return to_natural(q);
}

Natural to_natural(const Integer& n) {
    if (sgn(n) < 0 || !n.fits_ulong_p()) throw DomainError("value does not fit a natural");
    return static_cast<Natural>(n.get_ui());
}

}  // namespace hardylab::exact
