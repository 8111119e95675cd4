#include "hardylab/cesaro_operator.hpp"

#include <cmath>

namespace hardylab::hardy {

std::vector<double> cesaro_matvec(const std::vector<double>& x) {
    std::vector<double> y(x.size());
    double prefix = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) {
        prefix += x[n];
        y[n] = prefix / static_cast<double>(n + 1);
    }
    return y;
}

std::vector<double> cesaro_adjoint_matvec(const std::vector<double>& y) {
    std::vector<double> z(y.size());
    double suffix = 0.0;
    for (std::size_t k = y.size(); k-- > 0;) {
        suffix += y[k] / static_cast<double>(k + 1);
        z[k] = suffix;
    }
    return z;
}

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

Norm2Estimate cesaro_norm2(std::uint64_t N, std::uint64_t max_iters, double tol) {
    std::vector<double> v(static_cast<std::size_t>(N) + 1, 1.0);
    const double inv_norm0 = 1.0 / norm2(v);
    for (double& x : v) x *= inv_norm0;

    Norm2Estimate est;
    double lambda_prev = 0.0;
    for (std::uint64_t it = 1; it <= max_iters; ++it) {
        std::vector<double> u = cesaro_adjoint_matvec(cesaro_matvec(v));  // u = CᵀC v
        const double lambda = norm2(u);  // ‖CᵀCv‖ ≤ λ_max for unit v
        est.iterations = it;
        est.sigma = std::sqrt(lambda);
        est.residual = std::abs(lambda - lambda_prev) / (lambda > 0 ? lambda : 1.0);
        if (lambda == 0.0) break;  // zero operator (unreachable for N ≥ 0)
        for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] / lambda;
        if (est.residual <= tol) break;
        lambda_prev = lambda;
    }
    return est;
}

}  // namespace hardylab::hardy
