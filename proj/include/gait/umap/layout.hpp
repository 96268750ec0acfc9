#pragma once

#include "gait/matrix.hpp"
#include "gait/rng.hpp"
#include "gait/umap/fuzzy.hpp"

#include <cstddef>

namespace gait::umap {

/// Guard added inside repulsive denominators so coincident points stay finite.
inline constexpr double kRepulsionEps = 1e-3;

struct ObjectiveValue {
    double loss = 0.0;
    Matrix gradient; // same shape as the coordinates
};

/// Full-batch cross-entropy objective over the stored edges:
///   sum_e −mu·log phi(d) − (1 − mu)·log(1 − phi(d)),
/// phi(d) = (1 + a·d^(2b))⁻¹, with the repulsive factor evaluated at
/// d² + eps. Used as the analytic reference for the stochastic optimizer;
/// the returned gradient matches the returned loss exactly.
ObjectiveValue layout_objective(const Matrix& z, const FuzzyGraph& graph, double a, double b);

struct SgdParams {
    double a = 1.0;
    double b = 1.0;
    std::size_t epochs = 500;
    std::size_t negative_samples = 5;
    double initial_lr = 1.0;
    double repulsion_strength = 1.0;
};

/// Sequential per-edge stochastic optimizer with negative sampling.
/// Edge visit order is reshuffled each epoch from `rng`; the learning rate
/// decays linearly to 0; per-coordinate gradient terms are clipped to ±4.
/// Deterministic given rng state.
void sgd_layout(Matrix& z, const FuzzyGraph& graph, const SgdParams& params, Rng& rng);

} // namespace gait::umap
