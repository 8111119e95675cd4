#pragma once

#include "hardylab/errors.hpp"
#include "hardylab/rational.hpp"

namespace hardylab::seq {

// The exponent p ≥ 1 together with its conjugate p' = p/(p-1).
// For p > 1 the pair satisfies 1/p + 1/p' = 1 exactly; p = 1 has no
// finite conjugate.
class PNorm {
  public:
    explicit PNorm(exact::Rational p) : p_(std::move(p)) {
        if (p_ < exact::Rational(1)) throw DomainError("PNorm requires p >= 1");
    }

    const exact::Rational& p() const { return p_; }
    bool is_integer() const { return p_.is_integer(); }
    bool has_conjugate() const { return p_ > exact::Rational(1); }

    exact::Rational conjugate() const {
        if (!has_conjugate()) throw ConjugateUndefined("p' is infinite at p = 1");
        return p_ / (p_ - exact::Rational(1));
    }

  private:
    exact::Rational p_;
};

}  // namespace hardylab::seq
