#include "hardylab/fuzz.hpp"

namespace hardylab::cov {

FuzzWitness builtin_probe() {
    const seq::Seq a = seq::Seq::from_entries({{2, Rational(1)}});
    const Rate s{Rational(2, 3)};
    return {0, a, s, verify_change_of_variable(a, s, false)};
}

std::vector<FuzzWitness> fuzz_unrestricted(const FuzzParams& params) {
    std::vector<FuzzWitness> witnesses;
    witnesses.push_back(builtin_probe());
    for (Natural k = 1; k <= params.trials; ++k) {
        SampleRng rng = SampleRng::derived(params.seed, k);
        const seq::Seq a =
            random_seq(rng, params.support_max, params.value_num_max, params.value_den_max);
        const Rate s = random_rate(rng, params.s_denom_max);
        CovReport report = verify_change_of_variable(a, s, false);
        if (!report.holds) witnesses.push_back({k, a, s, std::move(report)});
    }
    return witnesses;
}

}  // namespace hardylab::cov
