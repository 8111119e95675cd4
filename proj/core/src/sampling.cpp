#include "hardylab/sampling.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace hardylab {

using exact::Natural;
using exact::Rational;

Rational random_value(SampleRng& rng, std::uint64_t num_max, std::uint64_t den_max, bool allow_negative) {
    const long num = static_cast<long>(rng.between(1, num_max));
    const long den = static_cast<long>(rng.between(1, den_max));
    const bool neg = allow_negative && rng.coin();
    return Rational(neg ? -num : num, den);
}

seq::Seq random_seq(SampleRng& rng, Natural support_max, std::uint64_t num_max, std::uint64_t den_max,
                    bool allow_negative, Natural min_index) {
    const Natural slots = support_max - min_index + 1;
    const Natural want = static_cast<Natural>(rng.between(1, std::min<std::uint64_t>(slots, 16)));
    std::set<Natural> indices;
    while (indices.size() < want) indices.insert(static_cast<Natural>(rng.between(min_index, support_max)));
    std::vector<seq::Entry> entries;
    entries.reserve(indices.size());
    for (Natural i : indices) entries.push_back({i, random_value(rng, num_max, den_max, allow_negative)});
    return seq::Seq::from_entries(std::move(entries));
}

seq::Seq random_monotone_seq(SampleRng& rng, Natural max_len, std::uint64_t num_max, std::uint64_t den_max) {
    const Natural len = static_cast<Natural>(rng.between(1, max_len));
    std::vector<Rational> values;
    values.reserve(len);
    for (Natural i = 0; i < len; ++i) values.push_back(random_value(rng, num_max, den_max, false));
    std::sort(values.begin(), values.end(), [](const Rational& x, const Rational& y) { return y < x; });
    return seq::Seq::dense(values);
}

cov::Rate random_rate(SampleRng& rng, std::uint64_t den_max, std::uint64_t s_max) {
    const long den = static_cast<long>(rng.between(1, den_max));
    const long num = static_cast<long>(rng.between(1, static_cast<std::uint64_t>(den) * s_max));
    return cov::Rate(Rational(num, den));
}

}  // namespace hardylab
