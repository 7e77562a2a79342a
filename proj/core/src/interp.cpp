#include "sfgft/interp.hpp"

#include <cmath>
#include <stdexcept>

#include "sfgft/errors.hpp"
#include "sfgft/svd.hpp"

namespace sfgft {

namespace {

void require_shared_partition(const SpectralFoldingGft& gft, const SampledSignal& xs) {
    if (xs.partition.n() != gft.n() || xs.partition.sample_set() != gft.partition().sample_set())
        throw std::invalid_argument("sampled signal and transform use different partitions");
    if (static_cast<int>(xs.values_on_s.size()) != xs.partition.size())
        throw std::invalid_argument("sampled signal length does not match its partition");
}

}  // namespace

SampledSignal sample_signal(const VertexPartition& p, std::span<const double> x) {
    if (static_cast<int>(x.size()) != p.n()) throw std::invalid_argument("sample_signal: length mismatch");
    std::vector<double> vals;
    vals.reserve(p.size());
    for (int v : p.sample_set()) vals.push_back(x[v]);
    return {p, std::move(vals)};
}

std::vector<double> interpolate_sf(const SpectralFoldingGft& gft, const SampledSignal& xs) {
    require_shared_partition(gft, xs);
    const int r = gft.r();
    if (r < 1) throw Error("interpolate_sf: empty bandlimited subspace");
    const int n = gft.n();
    const int s = gft.s_size();

    const auto qx = multiply(gft.q_s(), xs.values_on_s);

    // c = 2 U_SR^T (Q_S x_S); U_SR is the top-left s x r block of the basis.
    std::vector<double> c(r, 0.0);
    for (int i = 0; i < s; ++i) {
        const double w = 2.0 * qx[i];
        for (int j = 0; j < r; ++j) c[j] += w * gft.basis()(i, j);
    }

    std::vector<double> yp(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < r; ++j) acc += gft.basis()(i, j) * c[j];
        yp[i] = acc;
    }
    return gft.to_vertex(yp);
}

std::vector<double> interpolate_bl_ls(const EigenDecomposition& basis, std::span<const double> weight_diag,
                                      const SampledSignal& xs, int k) {
    const int n = basis.vectors.rows();
    if (k < 1 || k > n) throw std::invalid_argument("interpolate_bl_ls: cutoff out of range");
    if (xs.partition.n() != n) throw std::invalid_argument("interpolate_bl_ls: partition size mismatch");
    if (static_cast<int>(weight_diag.size()) != n) throw std::invalid_argument("interpolate_bl_ls: weight length mismatch");

    const std::vector<int>& s = xs.partition.sample_set();
    const int m = static_cast<int>(s.size());

    Matrix usk(m, k);
    std::vector<double> rhs(m);
    for (int i = 0; i < m; ++i) {
        const double sw = std::sqrt(weight_diag[s[i]]);
        for (int j = 0; j < k; ++j) usk(i, j) = sw * basis.vectors(s[i], j);
        rhs[i] = sw * xs.values_on_s[i];
    }

    const auto c = lstsq_min_norm(usk, rhs, 1e-10);

    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < k; ++j) acc += basis.vectors(i, j) * c[j];
        y[i] = acc;
    }
    return y;
}

double objective_value(const SpectralFoldingGft& gft, std::span<const double> y, const SampledSignal& xs) {
    require_shared_partition(gft, xs);
    if (static_cast<int>(y.size()) != gft.n()) throw std::invalid_argument("objective_value: length mismatch");
    const auto yp = gft.to_internal(y);
    const int s = gft.s_size();

    std::vector<double> err_s(s);
    for (int i = 0; i < s; ++i) err_s[i] = yp[i] - xs.values_on_s[i];
    const std::span<const double> y_sc(yp.data() + s, yp.size() - s);
    return quadratic_form(gft.q_s(), err_s) + quadratic_form(gft.q_sc(), y_sc);
}

BruteForceSolution brute_force_oracle(const SpectralFoldingGft& gft, const SampledSignal& xs) {
    require_shared_partition(gft, xs);
    const int r = gft.r();
    if (r < 1) throw Error("brute_force_oracle: empty bandlimited subspace");
    const int n = gft.n();
    const int s = gft.s_size();

    Matrix usr(s, r);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) usr(i, j) = gft.basis()(i, j);

    const auto c = lstsq_min_norm(usr, xs.values_on_s, 1e-12);

    double defect = 0.0;
    for (int i = 0; i < s; ++i) {
        double fit = 0.0;
        for (int j = 0; j < r; ++j) fit += usr(i, j) * c[j];
        const double d = fit - xs.values_on_s[i];
        defect += d * d;
    }

    std::vector<double> yp(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < r; ++j) acc += gft.basis()(i, j) * c[j];
        yp[i] = acc;
    }
    return {gft.to_vertex(yp), std::sqrt(defect)};
}

}  // namespace sfgft
