#include "sfgft/svd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sfgft/errors.hpp"

namespace sfgft {

namespace {

// One-sided Jacobi on a tall-or-square matrix: orthogonalizes the columns of
// w by plane rotations, accumulating them into v so w = a v holds throughout.
void orthogonalize_columns(Matrix& w, Matrix& v) {
    const int m = w.rows();
    const int n = w.cols();
    const double tol = 1e-15;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        int rotations = 0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (int i = 0; i < m; ++i) {
                    const double wp = w(i, p);
                    const double wq = w(i, q);
                    alpha += wp * wp;
                    beta += wq * wq;
                    gamma += wp * wq;
                }
                if (gamma == 0.0 || std::abs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
                ++rotations;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int i = 0; i < m; ++i) {
                    const double wp = w(i, p);
                    w(i, p) = c * wp - s * w(i, q);
                    w(i, q) = s * wp + c * w(i, q);
                }
                for (int i = 0; i < n; ++i) {
                    const double vp = v(i, p);
                    v(i, p) = c * vp - s * v(i, q);
                    v(i, q) = s * vp + c * v(i, q);
                }
            }
        }
        if (rotations == 0) return;
    }
    throw NumericalError("jacobi_svd: no convergence within sweep budget");
}

Svd svd_tall(const Matrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    Matrix w = a;
    Matrix v = Matrix::identity(n);
    orthogonalize_columns(w, v);

    std::vector<double> sigma(n);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += w(i, j) * w(i, j);
        sigma[j] = std::sqrt(s);
    }

    std::vector<int> order(n);
    for (int j = 0; j < n; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sigma[x] > sigma[y]; });

    Svd out{Matrix(m, n), std::vector<double>(n), Matrix(n, n)};
    for (int j = 0; j < n; ++j) {
        const int src = order[j];
        out.sigma[j] = sigma[src];
        const double inv = sigma[src] > 0.0 ? 1.0 / sigma[src] : 0.0;
        for (int i = 0; i < m; ++i) out.u(i, j) = w(i, src) * inv;
        for (int i = 0; i < n; ++i) out.v(i, j) = v(i, src);
    }
    return out;
}

}  // namespace

Svd jacobi_svd(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("jacobi_svd: empty matrix");
    if (!a.all_finite()) throw std::invalid_argument("jacobi_svd: non-finite entries");
    if (a.rows() >= a.cols()) return svd_tall(a);
    Svd t = svd_tall(transpose(a));
    return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

std::vector<double> lstsq_min_norm(const Matrix& a, std::span<const double> b, double rcond) {
    if (a.rows() != static_cast<int>(b.size())) throw std::invalid_argument("lstsq_min_norm: rhs length mismatch");
    const Svd svd = jacobi_svd(a);
    const double cutoff = rcond * (svd.sigma.empty() ? 0.0 : svd.sigma.front());

    std::vector<double> x(a.cols(), 0.0);
    for (size_t j = 0; j < svd.sigma.size(); ++j) {
        if (svd.sigma[j] <= cutoff || svd.sigma[j] == 0.0) break;
        double proj = 0.0;
        for (int i = 0; i < a.rows(); ++i) proj += svd.u(i, static_cast<int>(j)) * b[i];
        const double scale = proj / svd.sigma[j];
        for (int i = 0; i < a.cols(); ++i) x[i] += scale * svd.v(i, static_cast<int>(j));
    }
    return x;
}

}  // namespace sfgft
