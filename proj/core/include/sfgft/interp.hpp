#pragma once

#include <vector>

#include "sfgft/eigensolver.hpp"
#include "sfgft/gft.hpp"
#include "sfgft/graph.hpp"

namespace sfgft {

struct SampledSignal {
    VertexPartition partition;
    std::vector<double> values_on_s;  // ordered like partition.sample_set()
};

// Restriction of a full vertex signal to the sample set.
SampledSignal sample_signal(const VertexPartition& p, std::span<const double> x);

// Closed-form bandlimited interpolation: y = 2 U_VR U_SR^T Q_S x_S. A fixed
// linear map, not a fit; output lies in the span of the first r basis
// columns and agrees with x_S on S when the sampled values are consistent
// with that subspace.
std::vector<double> interpolate_sf(const SpectralFoldingGft& gft, const SampledSignal& xs);

// Baseline reconstruction: fit the first k columns of an eigenbasis to the
// samples by least squares in the weight norm restricted to S, then extend.
// weight_diag holds the diagonal inner-product operator (all ones for the
// plain Laplacian basis, vertex degrees for the degree-normalized one).
std::vector<double> interpolate_bl_ls(const EigenDecomposition& basis, std::span<const double> weight_diag,
                                      const SampledSignal& xs, int k);

// ||y_S - x_S||^2_{Q_S} + ||y_Sc||^2_{Q_Sc}
double objective_value(const SpectralFoldingGft& gft, std::span<const double> y, const SampledSignal& xs);

struct BruteForceSolution {
    std::vector<double> signal;
    // Equality-constraint defect of the least-squares fit; near zero when
    // the sampled values are attainable inside the bandlimited subspace.
    double constraint_residual = 0.0;
};

// Direct numerical solution of the constrained interpolation problem:
// parameterize y = U_VR c, solve U_SR c = x_S by min-norm least squares.
// Test-scale oracle; cost is cubic in n.
BruteForceSolution brute_force_oracle(const SpectralFoldingGft& gft, const SampledSignal& xs);

}  // namespace sfgft
