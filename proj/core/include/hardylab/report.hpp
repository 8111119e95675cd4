#pragma once

#include <optional>
#include <string>

#include "hardylab/rational.hpp"

namespace hardylab {

enum class Status { Verified, Violated, Inconclusive };

const char* to_string(Status s);

// Outcome record of one verification. `lhs`/`rhs` are the two exactly
// computed sides of whatever comparison the check performed.
struct Report {
    Status status = Status::Verified;
    exact::Rational lhs;
    exact::Rational rhs;
    // First index at which a pointwise check failed, when that is meaningful.
    std::optional<exact::Natural> failure_index;
    // Positive gap reported by one-sided checks that could not conclude.
    std::optional<exact::Rational> gap;
    std::string note;

    bool ok() const { return status == Status::Verified; }
};

}  // namespace hardylab
