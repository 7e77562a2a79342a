#pragma once

#include <cstdint>
#include <vector>

#include "sfgft/graph.hpp"

namespace sfgft {

struct SensorField {
    std::vector<Point2> positions;  // inside the unit square
    std::uint64_t seed = 0;
};

SensorField place_sensors(int n, std::uint64_t seed);

// s_i = cos(2 pi omega x_i); the field's y coordinates do not enter.
std::vector<double> eval_signal(const SensorField& field, double omega);

std::vector<double> add_noise(std::span<const double> signal, double sigma, std::uint64_t seed);

// m distinct vertices uniformly without replacement.
VertexPartition sample_random(int n, int m, std::uint64_t seed);

// Nearest sensor to each cell center of a g x g grid, g = round(sqrt(m)),
// deduplicated and sorted. May return fewer than m indices. Ties on equal
// distance go to the lower sensor index.
std::vector<int> select_uniform_grid(const SensorField& field, int m);

// select_uniform_grid wrapped as a partition; requires the selection to be
// a nonempty strict subset of the vertices.
VertexPartition sample_uniform_grid(const SensorField& field, int m);

// 10 log10 of truth energy over error energy on eval_set. Zero error energy
// returns +infinity (reports cap it); zero truth energy is an error.
double snr_db(std::span<const double> truth, std::span<const double> estimate, const std::vector<int>& eval_set);

}  // namespace sfgft
