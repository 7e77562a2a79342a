#pragma once

#include <utility>
#include <vector>

#include "sfgft/eigensolver.hpp"
#include "sfgft/graph.hpp"
#include "sfgft/matrix.hpp"

namespace sfgft {

// Eigenvalues within kEigTol of 1 are excluded from the bandlimited index
// set; the closed-form interpolator needs lambda_r strictly below 1.
inline constexpr double kEigTol = 1e-8;

// (L_SS, L_ScSc); throws when either block is singular, naming the offender.
std::pair<Matrix, Matrix> build_q(const Matrix& lap, const VertexPartition& p);

// Graph Fourier transform with basis solving L u = lambda Q u, where
// Q = blockdiag(L_SS, L_ScSc). Vertices are stored internally with S first;
// the permutation is applied on the way in and out so callers always see
// original vertex order. Q itself is never materialized as a full table.
class SpectralFoldingGft {
public:
    const VertexPartition& partition() const { return partition_; }
    const Matrix& q_s() const { return q_s_; }
    const Matrix& q_sc() const { return q_sc_; }
    const Matrix& basis() const { return basis_; }
    const Matrix& laplacian_permuted() const { return lap_perm_; }
    const std::vector<double>& lambdas() const { return lambdas_; }
    int r() const { return r_; }
    int n() const { return partition_.n(); }
    int s_size() const { return partition_.size(); }

    std::vector<double> to_internal(std::span<const double> x) const;
    std::vector<double> to_vertex(std::span<const double> xp) const;

    // Q times a vector in internal order, computed blockwise.
    std::vector<double> apply_q(std::span<const double> xp) const;

    friend SpectralFoldingGft build_gft(const Graph& g, const VertexPartition& p);

private:
    SpectralFoldingGft(VertexPartition p, std::vector<int> perm, Matrix q_s, Matrix q_sc, Matrix lap_perm,
                       Matrix basis, std::vector<double> lambdas, int r)
        : partition_(std::move(p)), perm_(std::move(perm)), q_s_(std::move(q_s)), q_sc_(std::move(q_sc)),
          lap_perm_(std::move(lap_perm)), basis_(std::move(basis)), lambdas_(std::move(lambdas)), r_(r) {}

    VertexPartition partition_;
    std::vector<int> perm_;  // internal position -> original vertex
    Matrix q_s_;
    Matrix q_sc_;
    Matrix lap_perm_;
    Matrix basis_;  // rows in internal order, columns Q-orthonormal
    std::vector<double> lambdas_;
    int r_;
};

SpectralFoldingGft build_gft(const Graph& g, const VertexPartition& p);

// x_hat = U^T Q x
std::vector<double> forward(const SpectralFoldingGft& gft, std::span<const double> x);
// x = U x_hat
std::vector<double> inverse(const SpectralFoldingGft& gft, std::span<const double> xhat);

double q_inner(const SpectralFoldingGft& gft, std::span<const double> x, std::span<const double> y);

struct FoldingReport {
    std::vector<double> residuals;  // per eigenpair, absolute
    double threshold = 0.0;         // tol * inf-norm of the Laplacian
    double max_residual = 0.0;
    bool all_pass = false;
};

// Checks that flipping each eigenvector's sign on S^c yields an eigenpair at
// the mirrored eigenvalue 2 - lambda.
FoldingReport verify_spectral_folding(const SpectralFoldingGft& gft, double tol);

// Raw residual kernel behind verify_spectral_folding; takes the components
// separately so tests can feed perturbed inputs.
std::vector<double> folding_residuals(const Matrix& lap_perm, int s_size, const Matrix& q_s, const Matrix& q_sc,
                                      const Matrix& basis, const std::vector<double>& lambdas);

}  // namespace sfgft
