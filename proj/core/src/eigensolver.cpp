#include "sfgft/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sfgft/errors.hpp"

namespace sfgft {

Matrix cholesky_lower(const Matrix& a, double pivot_tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("cholesky_lower: matrix not square");
    const int n = a.rows();
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(a(i, i)));
    const double floor = pivot_tol * max_diag;

    Matrix g(n, n);
    for (int j = 0; j < n; ++j) {
        double s = a(j, j);
        for (int k = 0; k < j; ++k) s -= g(j, k) * g(j, k);
        if (s <= floor) throw NumericalError("cholesky_lower: not positive definite (pivot " + std::to_string(s) + " at " + std::to_string(j) + ")");
        const double gjj = std::sqrt(s);
        g(j, j) = gjj;
        for (int i = j + 1; i < n; ++i) {
            double t = a(i, j);
            for (int k = 0; k < j; ++k) t -= g(i, k) * g(j, k);
            g(i, j) = t / gjj;
        }
    }
    return g;
}

bool cholesky_is_spd(const Matrix& a, double pivot_tol) {
    if (a.rows() != a.cols()) return false;
    const int n = a.rows();
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(a(i, i)));
    const double floor = pivot_tol * max_diag;

    Matrix g(n, n);
    for (int j = 0; j < n; ++j) {
        double s = a(j, j);
        for (int k = 0; k < j; ++k) s -= g(j, k) * g(j, k);
        if (s <= floor) return false;
        const double gjj = std::sqrt(s);
        g(j, j) = gjj;
        for (int i = j + 1; i < n; ++i) {
            double t = a(i, j);
            for (int k = 0; k < j; ++k) t -= g(i, k) * g(j, k);
            g(i, j) = t / gjj;
        }
    }
    return true;
}

std::vector<double> solve_lower(const Matrix& g, std::span<const double> b) {
    const int n = g.rows();
    std::vector<double> y(b.begin(), b.end());
    for (int i = 0; i < n; ++i) {
        double s = y[i];
        for (int k = 0; k < i; ++k) s -= g(i, k) * y[k];
        y[i] = s / g(i, i);
    }
    return y;
}

std::vector<double> solve_lower_transpose(const Matrix& g, std::span<const double> b) {
    const int n = g.rows();
    std::vector<double> y(b.begin(), b.end());
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < n; ++k) s -= g(k, i) * y[k];
        y[i] = s / g(i, i);
    }
    return y;
}

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form. On exit z
// holds the accumulated orthogonal transform, d the diagonal and e the
// subdiagonal (e[i] couples i and i+1, e[n-1] unused). Reads the lower
// triangle of the input stored in z.
void tridiagonalize(Matrix& z, std::vector<double>& d, std::vector<double>& e) {
    const int n = z.rows();
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        double scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(z(i, k));
            if (scale == 0.0) {
                e[i] = z(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    z(i, k) /= scale;
                    h += z(i, k) * z(i, k);
                }
                double f = z(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    z(j, i) = z(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
                    for (int k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
                    e[j] = g / h;
                    f += e[j] * z(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = z(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k) z(j, k) -= f * e[k] + g * z(i, k);
                }
            }
        } else {
            e[i] = z(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;

    // Accumulate the Householder transforms into z.
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += z(i, k) * z(k, j);
                for (int k = 0; k <= l; ++k) z(k, j) -= g * z(k, i);
            }
        }
        d[i] = z(i, i);
        z(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) {
            z(j, i) = 0.0;
            z(i, j) = 0.0;
        }
    }
    for (int i = 0; i + 1 < n; ++i) e[i] = e[i + 1];
    e[n - 1] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e), rotations accumulated into the
// columns of z. Total rotation sweeps are capped at 30n.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, Matrix& z) {
    const int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();
    const int budget = 30 * n;
    int iterations = 0;

    for (int l = 0; l < n; ++l) {
        for (;;) {
            int m = l;
            while (m < n - 1) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
                ++m;
            }
            if (m == l) break;
            if (++iterations > budget) {
                throw NumericalError("sym_eig: QL failed to converge at index " + std::to_string(l) + " after " + std::to_string(budget) + " iterations");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            int i = m - 1;
            for (; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (int k = 0; k < n; ++k) {
                    f = z(k, i + 1);
                    z(k, i + 1) = s * z(k, i) + c * f;
                    z(k, i) = c * z(k, i) - s * f;
                }
            }
            if (r == 0.0 && i >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

void sort_ascending(std::vector<double>& d, Matrix& z) {
    const int n = static_cast<int>(d.size());
    for (int i = 0; i + 1 < n; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j)
            if (d[j] < d[k]) k = j;
        if (k != i) {
            std::swap(d[i], d[k]);
            for (int r = 0; r < n; ++r) {
                const double t = z(r, i);
                z(r, i) = z(r, k);
                z(r, k) = t;
            }
        }
    }
}

}  // namespace

EigenDecomposition sym_eig(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("sym_eig: matrix not square");
    if (!a.all_finite()) throw std::invalid_argument("sym_eig: non-finite entries");
    if (!is_symmetric(a, 1e-8 * std::max(1.0, max_abs(a)))) throw std::invalid_argument("sym_eig: matrix not symmetric");

    const int n = a.rows();
    EigenDecomposition dec{std::vector<double>(n), a};
    if (n == 1) {
        dec.lambdas[0] = a(0, 0);
        dec.vectors(0, 0) = 1.0;
        return dec;
    }
    std::vector<double> e(n, 0.0);
    tridiagonalize(dec.vectors, dec.lambdas, e);
    ql_implicit_shift(dec.lambdas, e, dec.vectors);
    sort_ascending(dec.lambdas, dec.vectors);
    return dec;
}

EigenDecomposition generalized_sym_eig(const Matrix& m, const Matrix& q) {
    if (m.rows() != m.cols() || q.rows() != q.cols() || m.rows() != q.rows())
        throw std::invalid_argument("generalized_sym_eig: shape mismatch");
    const int n = m.rows();

    const Matrix g = cholesky_lower(q);

    // C = G^{-1} m G^{-T}; two triangular solve passes, then symmetrize.
    Matrix y(n, n);
    for (int j = 0; j < n; ++j) {
        const auto col = solve_lower(g, m.column(j));
        for (int i = 0; i < n; ++i) y(i, j) = col[i];
    }
    const Matrix yt = transpose(y);
    Matrix c(n, n);
    for (int j = 0; j < n; ++j) {
        const auto col = solve_lower(g, yt.column(j));
        for (int i = 0; i < n; ++i) c(i, j) = col[i];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (c(i, j) + c(j, i));
            c(i, j) = v;
            c(j, i) = v;
        }

    EigenDecomposition dec = sym_eig(c);

    Matrix u(n, n);
    for (int j = 0; j < n; ++j) {
        const auto col = solve_lower_transpose(g, dec.vectors.column(j));
        for (int i = 0; i < n; ++i) u(i, j) = col[i];
    }
    dec.vectors = std::move(u);

    // Contract check: residual per eigenpair and q-orthonormality.
    const Matrix mu = multiply(m, dec.vectors);
    const Matrix qu = multiply(q, dec.vectors);
    double max_residual = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            max_residual = std::max(max_residual, std::abs(mu(i, j) - dec.lambdas[j] * qu(i, j)));
    const double m_norm = inf_norm(m);
    if (max_residual > 1e-8 * m_norm)
        throw NumericalError("generalized_sym_eig: residual " + std::to_string(max_residual) + " exceeds 1e-8 * " + std::to_string(m_norm));

    const Matrix gram = multiply_at_b(dec.vectors, qu);
    double max_ortho = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            max_ortho = std::max(max_ortho, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
    if (max_ortho > 1e-8)
        throw NumericalError("generalized_sym_eig: q-orthonormality defect " + std::to_string(max_ortho));

    return dec;
}

}  // namespace sfgft
