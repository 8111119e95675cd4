#pragma once

#include <vector>

#include "hardylab/enclosure.hpp"
#include "hardylab/seq.hpp"

namespace hardylab::hardy {

using exact::Enclosure;

struct SweepRow {
    Rational eps;
    Natural N;
    Enclosure ratio;  // ‖cesàro(a)‖_p / ‖a‖_p for a_n = (n+1)^(-1/p-eps), n ≤ N
};

// Ratio sweep over the classical near-extremal family a_n = (n+1)^(-1/p-eps).
// Entries are certified enclosures (the values are irrational); all
// accumulation is interval arithmetic with outward rounding on a fixed
// dyadic grid, so the reported ratio enclosures are exact statements.
// Ratios increase as eps decreases and stay below p' = p/(p-1).
// Requires integer p ≥ 2, positive distinct eps values, prec > 0.
std::vector<SweepRow> sharpness_sweep(unsigned long p, const std::vector<Rational>& eps_list,
                                      Natural N, const Rational& prec);

}  // namespace hardylab::hardy
