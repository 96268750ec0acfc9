#include "gait/umap/embed.hpp"

#include "gait/errors.hpp"
#include "gait/rng.hpp"
#include "gait/umap/calibrate.hpp"
#include "gait/umap/fuzzy.hpp"
#include "gait/umap/knn.hpp"
#include "gait/umap/layout.hpp"
#include "gait/umap/spectral.hpp"

#include <cmath>

namespace gait::umap {

EmbeddingResult embed(const FeatureMatrix& m, const EmbedParams& params, std::uint64_t seed) {
    const std::size_t n = m.values.rows();
    if (n < params.n_neighbors + 1) throw KTooLargeError(params.n_neighbors, n ? n - 1 : 0);

    const NeighborGraph knn = knn_graph(m.values, params.n_neighbors);
    const auto calibration = calibrate_all(knn);
    const FuzzyGraph graph = fuzzy_graph(knn, calibration);
    const CurveParams curve = fit_ab(params.min_dist, params.spread);

    EmbeddingResult result;
    result.labels = m.labels;
    result.params = params;
    result.curve = curve;
    result.seed = seed;

    // Independent streams so a change in one stage cannot silently shift
    // the draws of another.
    Rng init_rng = Rng::child(seed, 0);
    Rng layout_rng = Rng::child(seed, 1);

    bool spectral_ok = false;
    if (params.init == EmbedParams::Init::Spectral) {
        spectral_ok = spectral_init(graph, params.dim, init_rng, result.z);
    }
    if (!spectral_ok) {
        result.z = random_init(n, params.dim, init_rng);
        result.init_used = "random";
    } else {
        result.init_used = "spectral";
    }

    SgdParams sgd;
    sgd.a = curve.a;
    sgd.b = curve.b;
    sgd.epochs = params.epochs;
    sgd.negative_samples = params.negative_samples;
    sgd.initial_lr = params.initial_lr;
    sgd_layout(result.z, graph, sgd, layout_rng);

    for (double v : result.z.data()) {
        if (!std::isfinite(v)) throw NonFiniteError("embedding coordinates");
    }
    return result;
}

} // namespace gait::umap
