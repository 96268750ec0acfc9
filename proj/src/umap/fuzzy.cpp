#include "gait/umap/fuzzy.hpp"

#include "gait/errors.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace gait::umap {

FuzzyGraph fuzzy_graph(const NeighborGraph& graph, const std::vector<CalibratedRow>& cal) {
    const std::size_t n = graph.indices.size();
    if (cal.size() != n) throw ShapeMismatchError("calibration rows vs graph rows");

    // Directed membership per ordered pair, keyed by the unordered pair.
    std::map<std::pair<std::size_t, std::size_t>, std::pair<double, double>> directed;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t m = 0; m < graph.k; ++m) {
            const std::size_t j = graph.indices[i][m];
            const double gap = graph.distances[i][m] - cal[i].rho;
            const double mu = gap > 0.0 ? std::exp(-gap / cal[i].sigma) : 1.0;
            const bool forward = i < j;
            const auto key = forward ? std::make_pair(i, j) : std::make_pair(j, i);
            auto& slot = directed[key];
            (forward ? slot.first : slot.second) = mu;
        }
    }

    FuzzyGraph fg;
    fg.n_vertices = n;
    fg.edges.reserve(directed.size());
    for (const auto& [key, mus] : directed) {
        const double w = mus.first + mus.second - mus.first * mus.second;
        fg.edges.push_back({key.first, key.second, w});
    }
    return fg;
}

} // namespace gait::umap
