#pragma once

#include <optional>
#include <vector>

#include "hardylab/rational.hpp"

namespace hardylab::seq {

using exact::Natural;
using exact::Rational;

struct Entry {
    Natural index;
    Rational value;
};

// Finitely supported sequence of rationals indexed from 0. Stored in the
// canonical form: entries sorted by strictly increasing index, zero values
// dropped, so an absent index always means the value 0 and support_max is
// well-defined. Immutable after construction.
class Seq {
  public:
    Seq() = default;

    // Validates strictly increasing indices; zero values are dropped.
    static Seq from_entries(std::vector<Entry> entries);
    // Values at indices 0, 1, 2, ...
    static Seq dense(const std::vector<Rational>& values);

    bool empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }

    // Largest index carrying a nonzero value; nullopt for the zero sequence.
    std::optional<Natural> support_max() const;

    // Value at an index, 0 when absent.
    Rational value_at(Natural index) const;
    Rational abs_at(Natural index) const { return value_at(index).abs(); }

    // True when the dense view a_0, a_1, ... is non-increasing and
    // nonnegative. Any gap below the top of the support breaks this, since a
    // zero would then be followed by a positive value.
    bool is_nonincreasing_nonnegative() const;

    friend bool operator==(const Seq& a, const Seq& b);

  private:
    std::vector<Entry> entries_;
};

}  // namespace hardylab::seq
