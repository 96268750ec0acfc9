#pragma once

#include "gait/matrix.hpp"
#include "gait/umap/curve_fit.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace gait::umap {

struct EmbedParams {
    std::size_t n_neighbors = 15;
    double min_dist = 0.1;
    double spread = 1.0;
    std::size_t dim = 2;
    std::size_t epochs = 500;
    std::size_t negative_samples = 5;
    enum class Init { Spectral, Random } init = Init::Spectral;
    double initial_lr = 1.0;
};

struct EmbeddingResult {
    Matrix z; // N x dim
    std::vector<RowLabel> labels;
    EmbedParams params;
    CurveParams curve;      // fitted (a, b)
    std::uint64_t seed = 0;
    std::string init_used;  // "spectral" or "random" (after any fallback)
    std::string mode = "sequential";
};

/// Whole pipeline: kNN graph → smooth-kNN calibration → fuzzy union →
/// curve fit → initialization → stochastic layout. Deterministic given
/// seed. Requires N >= n_neighbors + 1 (KTooLargeError); throws
/// NonFiniteError if the layout diverges.
EmbeddingResult embed(const FeatureMatrix& m, const EmbedParams& params, std::uint64_t seed);

} // namespace gait::umap
