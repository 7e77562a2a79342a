#pragma once

#include <vector>

#include "sfgft/matrix.hpp"

namespace sfgft {

struct Svd {
    Matrix u;                   // rows(a) x k, k = min(rows, cols)
    std::vector<double> sigma;  // descending, length k
    Matrix v;                   // cols(a) x k
};

// One-sided Jacobi. Sized for the least-squares systems below, a few
// hundred rows at most.
Svd jacobi_svd(const Matrix& a);

// Minimum-norm least-squares solution of a x = b. Singular values at or
// below rcond * sigma_max are treated as zero.
std::vector<double> lstsq_min_norm(const Matrix& a, std::span<const double> b, double rcond);

}  // namespace sfgft
