#include "gait/umap/knn.hpp"

#include "gait/errors.hpp"
#include "gait/stats.hpp"

#include <algorithm>
#include <cmath>

namespace gait::umap {

NeighborGraph knn_graph(const Matrix& points, std::size_t k) {
    const std::size_t n = points.rows();
    if (n < 2 || k < 1 || k > n - 1) throw KTooLargeError(k, n >= 1 ? n - 1 : 0);
    const std::size_t d = points.cols();

    NeighborGraph g;
    g.k = k;
    g.indices.resize(n);
    g.distances.resize(n);

    std::vector<std::pair<double, std::size_t>> cand;
    cand.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        cand.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            cand.emplace_back(stats::squared_euclidean(points.row_ptr(i), points.row_ptr(j), d),
                              j);
        }
        // (distance, index) ordering makes tie-breaking by lower index explicit.
        std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k),
                          cand.end());
        g.indices[i].resize(k);
        g.distances[i].resize(k);
        for (std::size_t m = 0; m < k; ++m) {
            g.indices[i][m] = cand[m].second;
            g.distances[i][m] = std::sqrt(cand[m].first);
        }
    }
    return g;
}

} // namespace gait::umap
