#include "hardylab/ingham.hpp"

#include "hardylab/seq_ops.hpp"

namespace hardylab::hardy {

exact::Rational ingham_integral(const seq::Seq& a, exact::Natural n) {
    using exact::Integer;
    using exact::Rational;
    const Rational denom{Integer(n) + 1};
    Rational integral(0);
    for (exact::Natural k = 0; k <= n; ++k) {
        const Rational left = Rational(Integer(k)) / denom;
        const Rational right = Rational(Integer(k) + 1) / denom;
        integral += a.value_at(k) * (right - left);
    }
    const Rational mean = seq::cesaro(a, n).value_at(n);
    if (integral != mean) throw Error("ingham_integral: representation failed to match the Cesàro mean");
    return integral;
}

}  // namespace hardylab::hardy
