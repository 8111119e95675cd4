#include "hardylab/seq.hpp"

#include <algorithm>

namespace hardylab::seq {

Seq Seq::from_entries(std::vector<Entry> entries) {
    Seq s;
    s.entries_.reserve(entries.size());
    bool first = true;
    Natural prev = 0;
    for (auto& e : entries) {
        if (!first && e.index <= prev) throw DomainError("sequence indices must be strictly increasing");
        prev = e.index;
        first = false;
        if (!e.value.is_zero()) s.entries_.push_back(std::move(e));
    }
    return s;
}

Seq Seq::dense(const std::vector<Rational>& values) {
    std::vector<Entry> entries;
    entries.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) entries.push_back({static_cast<Natural>(i), values[i]});
    return from_entries(std::move(entries));
}

std::optional<Natural> Seq::support_max() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.back().index;
}

Rational Seq::value_at(Natural index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, Natural i) { return e.index < i; });
    if (it != entries_.end() && it->index == index) return it->value;
    return Rational(0);
}

bool Seq::is_nonincreasing_nonnegative() const {
    // Canonical form stores no zeros, so the support must be the contiguous
    // prefix 0..K with positive non-increasing values.
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].index != i) return false;
        if (entries_[i].value.is_negative()) return false;
        if (i > 0 && entries_[i].value > entries_[i - 1].value) return false;
    }
    return true;
}

bool operator==(const Seq& a, const Seq& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        if (a.entries_[i].index != b.entries_[i].index) return false;
        if (a.entries_[i].value != b.entries_[i].value) return false;
    }
    return true;
}

}  // namespace hardylab::seq
