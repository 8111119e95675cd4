#include "hardylab/breakpoints.hpp"

#include <algorithm>
#include <numeric>

#include "hardylab/errors.hpp"

namespace hardylab::hardy {

Breakpoints enumerate_breakpoints(Natural support_max, const Rational& s_min, Natural n_cap) {
    if (s_min.sign() <= 0 || s_min >= Rational(1)) throw DomainError("s_min must lie in (0, 1)");
    const Rational needed = (Rational(exact::Integer(support_max)) + Rational(1)) / s_min;
    if (Rational(exact::Integer(n_cap)) < needed) {
        throw DomainError("n_cap must be at least ceil((support_max+1)/s_min)");
    }

    Breakpoints bp;
    bp.s_min = s_min;
    for (Natural n = 1; n <= n_cap; ++n) {
        const Natural m_top = std::min<Natural>(support_max + 1, n);
        for (Natural m = 1; m <= m_top; ++m) {
            if (std::gcd(m, n) != 1) continue;
            Rational cut{static_cast<long>(m), static_cast<long>(n)};
            if (cut > s_min) bp.cuts.push_back(std::move(cut));
        }
    }
    std::sort(bp.cuts.begin(), bp.cuts.end());
    return bp;
}

}  // namespace hardylab::hardy
