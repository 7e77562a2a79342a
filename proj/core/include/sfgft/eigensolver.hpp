#pragma once

#include <vector>

#include "sfgft/matrix.hpp"

namespace sfgft {

struct EigenDecomposition {
    std::vector<double> lambdas;  // ascending
    Matrix vectors;               // column i pairs with lambdas[i]
};

// Returns lower-triangular G with G Gᵀ = a. Throws NumericalError when a
// pivot falls below pivot_tol * max diagonal entry.
Matrix cholesky_lower(const Matrix& a, double pivot_tol = 1e-12);

// Non-throwing positive-definiteness probe; pivot_tol is relative to the
// max diagonal entry, same scaling as cholesky_lower.
bool cholesky_is_spd(const Matrix& a, double pivot_tol);

// Solves G y = b (G lower-triangular) by forward substitution.
std::vector<double> solve_lower(const Matrix& g, std::span<const double> b);
// Solves Gᵀ y = b by back substitution.
std::vector<double> solve_lower_transpose(const Matrix& g, std::span<const double> b);

// Householder tridiagonalization + implicit-shift QL. Iteration budget is
// 30 sweeps per eigenvalue; exceeding it throws NumericalError.
EigenDecomposition sym_eig(const Matrix& a);

// m u = lambda q u with q positive definite. Reduces via q = GGᵀ to a
// standard problem on G⁻¹ m G⁻ᵀ and maps vectors back through Gᵀ. Verifies
// the residual and q-orthonormality contracts (1e-8 relative) before
// returning and throws NumericalError if either fails.
EigenDecomposition generalized_sym_eig(const Matrix& m, const Matrix& q);

}  // namespace sfgft
