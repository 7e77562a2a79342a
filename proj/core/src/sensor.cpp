#include "sfgft/sensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "sfgft/errors.hpp"
#include "sfgft/rng.hpp"

namespace sfgft {

SensorField place_sensors(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("place_sensors: need at least 2 sensors");
    SensorField field;
    field.seed = seed;
    field.positions.resize(static_cast<size_t>(n));
    Rng rng(seed);
    for (auto& p : field.positions) {
        p.x = rng.uniform01();
        p.y = rng.uniform01();
    }
    return field;
}

std::vector<double> eval_signal(const SensorField& field, double omega) {
    std::vector<double> s(field.positions.size());
    for (size_t i = 0; i < s.size(); ++i) s[i] = std::cos(2.0 * std::numbers::pi * omega * field.positions[i].x);
    return s;
}

std::vector<double> add_noise(std::span<const double> signal, double sigma, std::uint64_t seed) {
    if (sigma < 0.0) throw std::invalid_argument("add_noise: negative sigma");
    std::vector<double> out(signal.begin(), signal.end());
    if (sigma == 0.0) return out;
    Rng rng(seed);
    for (double& v : out) v += sigma * rng.normal();
    return out;
}

VertexPartition sample_random(int n, int m, std::uint64_t seed) {
    if (m < 1 || m >= n) throw std::invalid_argument("sample_random: need 1 <= m < n");
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    for (int i = 0; i < m; ++i) {
        const int j = i + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(static_cast<size_t>(m));
    return VertexPartition(std::move(idx), n);
}

std::vector<int> select_uniform_grid(const SensorField& field, int m) {
    if (m < 1) throw std::invalid_argument("select_uniform_grid: m must be positive");
    if (field.positions.empty()) throw std::invalid_argument("select_uniform_grid: empty field");
    const int g = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(m)))));

    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(g) * g);
    for (int a = 0; a < g; ++a) {
        for (int b = 0; b < g; ++b) {
            const double cx = (a + 0.5) / g;
            const double cy = (b + 0.5) / g;
            int best = 0;
            double best_d2 = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < field.positions.size(); ++i) {
                const double dx = field.positions[i].x - cx;
                const double dy = field.positions[i].y - cy;
                const double d2 = dx * dx + dy * dy;
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = static_cast<int>(i);
                }
            }
            chosen.push_back(best);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    return chosen;
}

VertexPartition sample_uniform_grid(const SensorField& field, int m) {
    return VertexPartition(select_uniform_grid(field, m), static_cast<int>(field.positions.size()));
}

double snr_db(std::span<const double> truth, std::span<const double> estimate, const std::vector<int>& eval_set) {
    if (eval_set.empty()) throw std::invalid_argument("snr_db: empty evaluation set");
    if (truth.size() != estimate.size()) throw std::invalid_argument("snr_db: length mismatch");
    double signal = 0.0;
    double error = 0.0;
    for (int i : eval_set) {
        if (i < 0 || i >= static_cast<int>(truth.size())) throw std::out_of_range("snr_db: index out of range");
        signal += truth[i] * truth[i];
        const double e = truth[i] - estimate[i];
        error += e * e;
    }
    if (signal == 0.0) throw Error("snr_db: undefined SNR, zero truth energy on evaluation set");
    if (error == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(signal / error);
}

}  // namespace sfgft
