#include "sfgft/gft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sfgft/errors.hpp"

namespace sfgft {

std::pair<Matrix, Matrix> build_q(const Matrix& lap, const VertexPartition& p) {
    const AdmissibilityReport rep = check_partition_admissible(lap, p);
    if (!rep.admissible) throw NumericalError("build_q: partition not admissible: " + rep.detail);
    const std::vector<int> s = p.sample_set();
    const std::vector<int> sc = p.complement();
    return {principal_submatrix(lap, s, s), principal_submatrix(lap, sc, sc)};
}

std::vector<double> SpectralFoldingGft::to_internal(std::span<const double> x) const {
    std::vector<double> xp(perm_.size());
    for (size_t i = 0; i < perm_.size(); ++i) xp[i] = x[perm_[i]];
    return xp;
}

std::vector<double> SpectralFoldingGft::to_vertex(std::span<const double> xp) const {
    std::vector<double> x(perm_.size());
    for (size_t i = 0; i < perm_.size(); ++i) x[perm_[i]] = xp[i];
    return x;
}

std::vector<double> SpectralFoldingGft::apply_q(std::span<const double> xp) const {
    const int s = q_s_.rows();
    const int sc = q_sc_.rows();
    std::vector<double> out(static_cast<size_t>(s) + sc);
    const auto ys = multiply(q_s_, xp.subspan(0, s));
    const auto ysc = multiply(q_sc_, xp.subspan(s, sc));
    std::copy(ys.begin(), ys.end(), out.begin());
    std::copy(ysc.begin(), ysc.end(), out.begin() + s);
    return out;
}

SpectralFoldingGft build_gft(const Graph& g, const VertexPartition& p) {
    if (p.n() != g.n()) throw std::invalid_argument("build_gft: partition size mismatch");
    const int n = g.n();
    const int s = p.size();

    const Matrix lap = laplacian(g);
    auto [q_s, q_sc] = build_q(lap, p);

    std::vector<int> perm = p.sample_set();
    const std::vector<int> sc = p.complement();
    perm.insert(perm.end(), sc.begin(), sc.end());
    const Matrix lap_perm = principal_submatrix(lap, perm, perm);

    // Scoped assembly for the eigensolve only; the GFT keeps the blocks.
    Matrix q_full(n, n);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) q_full(i, j) = q_s(i, j);
    for (int i = 0; i < n - s; ++i)
        for (int j = 0; j < n - s; ++j) q_full(s + i, s + j) = q_sc(i, j);

    EigenDecomposition dec = generalized_sym_eig(lap_perm, q_full);

    int r = 0;
    while (r < n && dec.lambdas[r] < 1.0 - kEigTol) ++r;

    for (double l : dec.lambdas)
        if (l < -kEigTol || l > 2.0 + kEigTol)
            throw NumericalError("build_gft: eigenvalue " + std::to_string(l) + " outside [0, 2]");
    for (int i = 0; i < n; ++i) {
        const double mirror = 2.0 - dec.lambdas[n - 1 - i];
        if (std::abs(dec.lambdas[i] - mirror) > 1e-7)
            throw NumericalError("build_gft: spectrum not symmetric about 1 at index " + std::to_string(i) +
                                 " (lambda " + std::to_string(dec.lambdas[i]) + " vs mirrored " + std::to_string(mirror) + ")");
    }
    if (r > s) throw NumericalError("build_gft: bandlimited dimension exceeds sample-set size");

    return SpectralFoldingGft(p, std::move(perm), std::move(q_s), std::move(q_sc), lap_perm,
                              std::move(dec.vectors), std::move(dec.lambdas), r);
}

std::vector<double> forward(const SpectralFoldingGft& gft, std::span<const double> x) {
    if (static_cast<int>(x.size()) != gft.n()) throw std::invalid_argument("forward: length mismatch");
    const auto xp = gft.to_internal(x);
    const auto qx = gft.apply_q(xp);
    return multiply_transpose(gft.basis(), qx);
}

std::vector<double> inverse(const SpectralFoldingGft& gft, std::span<const double> xhat) {
    if (static_cast<int>(xhat.size()) != gft.n()) throw std::invalid_argument("inverse: length mismatch");
    const auto xp = multiply(gft.basis(), xhat);
    return gft.to_vertex(xp);
}

double q_inner(const SpectralFoldingGft& gft, std::span<const double> x, std::span<const double> y) {
    if (static_cast<int>(x.size()) != gft.n() || static_cast<int>(y.size()) != gft.n())
        throw std::invalid_argument("q_inner: length mismatch");
    const auto xp = gft.to_internal(x);
    const auto yp = gft.to_internal(y);
    const auto qy = gft.apply_q(yp);
    return dot(xp, qy);
}

std::vector<double> folding_residuals(const Matrix& lap_perm, int s_size, const Matrix& q_s, const Matrix& q_sc,
                                      const Matrix& basis, const std::vector<double>& lambdas) {
    const int n = lap_perm.rows();
    std::vector<double> residuals(lambdas.size(), 0.0);
    std::vector<double> flipped(n);
    for (size_t k = 0; k < lambdas.size(); ++k) {
        for (int i = 0; i < n; ++i) {
            const double sign = i < s_size ? 1.0 : -1.0;
            flipped[i] = sign * basis(i, static_cast<int>(k));
        }
        const auto lv = multiply(lap_perm, flipped);

        const auto qs_v = multiply(q_s, std::span<const double>(flipped).subspan(0, s_size));
        const auto qsc_v = multiply(q_sc, std::span<const double>(flipped).subspan(s_size, n - s_size));
        const double mu = 2.0 - lambdas[k];
        double worst = 0.0;
        for (int i = 0; i < s_size; ++i) worst = std::max(worst, std::abs(lv[i] - mu * qs_v[i]));
        for (int i = s_size; i < n; ++i) worst = std::max(worst, std::abs(lv[i] - mu * qsc_v[i - s_size]));
        residuals[k] = worst;
    }
    return residuals;
}

FoldingReport verify_spectral_folding(const SpectralFoldingGft& gft, double tol) {
    FoldingReport rep;
    rep.residuals = folding_residuals(gft.laplacian_permuted(), gft.s_size(), gft.q_s(), gft.q_sc(), gft.basis(), gft.lambdas());
    rep.threshold = tol * inf_norm(gft.laplacian_permuted());
    rep.max_residual = rep.residuals.empty() ? 0.0 : *std::max_element(rep.residuals.begin(), rep.residuals.end());
    rep.all_pass = rep.max_residual <= rep.threshold;
    return rep;
}

}  // namespace sfgft
