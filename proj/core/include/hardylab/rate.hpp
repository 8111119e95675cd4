#pragma once

#include "hardylab/errors.hpp"
#include "hardylab/rational.hpp"

namespace hardylab::cov {

// The subsampling parameter s as an exact positive rational. s = 0 is
// rejected at construction: the subsampled series would then diverge for
// any sequence with a_0 ≠ 0, leaving nothing exact to compare.
class Rate {
  public:
    explicit Rate(exact::Rational value) : v_(std::move(value)) {
        if (v_.sign() <= 0) throw DomainError("rate must be > 0");
    }

    const exact::Rational& value() const { return v_; }
    const exact::Integer num() const { return v_.numerator(); }
    const exact::Integer den() const { return v_.denominator(); }

  private:
    exact::Rational v_;
};

}  // namespace hardylab::cov
