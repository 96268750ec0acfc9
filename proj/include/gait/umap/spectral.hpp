#pragma once

#include "gait/matrix.hpp"
#include "gait/rng.hpp"
#include "gait/umap/fuzzy.hpp"

#include <cstddef>

namespace gait::umap {

/// Initial coordinates from the top nontrivial eigenvectors of the
/// degree-normalized adjacency (equivalently, bottom of the normalized
/// Laplacian), rescaled to max-abs 10 with a whisper of seeded noise to
/// break exact coincidences. Returns false (leaving z untouched) when the
/// eigensolve does not produce finite coordinates; the caller then falls
/// back to random initialization.
bool spectral_init(const FuzzyGraph& graph, std::size_t dim, Rng& rng, Matrix& z);

/// Seeded uniform fallback in [−10, 10]^dim.
Matrix random_init(std::size_t n, std::size_t dim, Rng& rng);

} // namespace gait::umap
