#pragma once

#include "hardylab/pnorm.hpp"
#include "hardylab/seq.hpp"

namespace hardylab::hardy {

using exact::Natural;
using exact::Rational;
using seq::Seq;

// The sharp constant p' = p/(p−1) of the discrete Hardy inequality,
// which is also the value of ∫₀¹ s^(-1/p) ds. Exact; throws
// ConjugateUndefined at p = 1.
Rational hardy_constant(const seq::PNorm& p);

// Certified verdict for ‖A‖_p ≤ p'·‖a‖_p at power-sum level. The left side
// is truncated at M and closed with an exact tail bound, so `holds` is a
// one-shot exact comparison covering the full infinite sum.
struct HardyReport {
    Rational lhs_power_sum;  // Σ_{n<M} |A_n|^p + tail_bound
    Rational rhs_power_sum;  // (p')^p · Σ |a_n|^p
    Rational tail_bound;
    bool holds = false;
    Natural M = 0;
};

// Requires integer p ≥ 2 and M ≥ support_max(a)+1. The tail over n ≥ M uses
// |A_n| ≤ (Σ|a_k|)/(n+1), valid once n is past the support.
HardyReport verify_hardy(const Seq& a, unsigned long p, Natural M);

}  // namespace hardylab::hardy
