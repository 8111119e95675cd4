#pragma once

#include <cstdint>
#include <vector>

namespace hardylab::hardy {

// Truncated Cesàro operator as a matrix-free kernel: y_n = (x_0+...+x_n)/(n+1),
// one prefix pass, linear cost.
std::vector<double> cesaro_matvec(const std::vector<double>& x);

// Adjoint: z_k = Σ_{n≥k} y_n/(n+1), one suffix pass.
std::vector<double> cesaro_adjoint_matvec(const std::vector<double>& y);

struct Norm2Estimate {
    double sigma = 0.0;     // lower-biased estimate of the largest singular value
    double residual = 0.0;  // relative change of the estimate at the last step
    std::uint64_t iterations = 0;
};

// Largest singular value of the (N+1)x(N+1) truncated Cesàro matrix by power
// iteration on CᵀC, started from the all-ones vector. Stops when the
// estimate moves by less than tol (relative) or at the iteration cap.
Norm2Estimate cesaro_norm2(std::uint64_t N, std::uint64_t max_iters = 100000, double tol = 1e-12);

}  // namespace hardylab::hardy
