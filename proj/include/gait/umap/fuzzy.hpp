#pragma once

#include "gait/umap/calibrate.hpp"
#include "gait/umap/knn.hpp"

#include <cstddef>
#include <vector>

namespace gait::umap {

/// Undirected weighted edge with i < j. The weight is the fuzzy-union
/// combination of the two directed memberships.
struct FuzzyEdge {
    std::size_t i = 0;
    std::size_t j = 0;
    double weight = 0.0; // in (0, 1]
};

struct FuzzyGraph {
    std::size_t n_vertices = 0;
    std::vector<FuzzyEdge> edges; // sorted by (i, j); each pair stored once
};

/// Directed memberships mu_ij = exp(−max(0, d_ij − rho_i)/sigma_i) for the
/// graph's neighbor pairs, symmetrized by mu + muᵀ − mu∘muᵀ.
FuzzyGraph fuzzy_graph(const NeighborGraph& graph, const std::vector<CalibratedRow>& cal);

} // namespace gait::umap
