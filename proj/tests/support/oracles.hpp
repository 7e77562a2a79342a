// Slow, independent reference computations used to cross-check the library.
// Everything here deliberately avoids the production eigensolver, SVD, and
// interpolation code paths.

#pragma once

#include <vector>

#include "sfgft/graph.hpp"
#include "sfgft/matrix.hpp"

namespace sfgft::testing {

// Gaussian elimination with partial pivoting; a is consumed.
double determinant(Matrix a);

// Solves a x = b by Gaussian elimination with partial pivoting. Throws on a
// numerically singular pivot.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

// Eigenvalues of the pencil (m, q) located as sign changes of
// det(m - t q) on a fine grid over [lo, hi], refined by bisection. Only
// suitable for small pencils with simple roots; even-multiplicity roots do
// not produce sign changes and are missed.
std::vector<double> pencil_eigenvalues_oracle(const Matrix& m, const Matrix& q, double lo, double hi,
                                              int grid = 20000);

// A unit null vector of (m - lambda q) for a simple eigenvalue lambda.
std::vector<double> pencil_eigenvector_oracle(const Matrix& m, const Matrix& q, double lambda);

// Dense KNN weights by full pairwise sort, same union symmetrization and
// lower-index tie rule as the production builder.
Matrix brute_force_knn_weights(const std::vector<Point2>& points, int k, double sigma_d);

// Minimizes y^T q y subject to rows * y = rhs via the KKT system. Redundant
// constraint rows are dropped by row-echelon preprocessing; inconsistent
// constraints throw.
std::vector<double> constrained_quadratic_min(const Matrix& q, const Matrix& rows, const std::vector<double>& rhs);

// Component-by-component boundary-edge criterion, decided purely by graph
// traversal (no linear algebra).
bool partition_admissible_oracle(const Graph& g, const VertexPartition& p);

}  // namespace sfgft::testing
