#pragma once

#include "gait/level1.hpp"
#include "gait/matrix.hpp"
#include "gait/umap/embed.hpp"

#include <cstdint>
#include <vector>

namespace gait {

/// Thresholds of the two detection predicates. tau_score is expressed as a
/// fraction of the pair's pooled score SD; the resolved absolute value is
/// echoed per pair in the report.
struct DissociationThresholds {
    double score_sd_fraction = 0.5; // tau_score = fraction * pooled SD
    double min_standardized_sep = 2.0;
    double min_silhouette = 0.25;
};

/// Latent-space separation evidence for one condition pair.
struct SeparationStats {
    double centroid_dist = 0.0;
    double pooled_spread = 0.0; // RMS within-group deviation from own centroid
    double standardized_sep = 0.0;
    double silhouette = 0.0;
};

/// Everything the detector saw for one unordered condition pair.
struct PairEvidence {
    Condition cond_i = Condition::ONL;
    Condition cond_j = Condition::ONL;
    double gpps_gap = 0.0;  // |mean_i − mean_j|
    double tau_score = 0.0; // resolved absolute score threshold
    bool iqr_overlap = false;
    SeparationStats separation;
    bool score_similar = false;
    bool latent_separated = false;
    bool flagged = false; // score_similar AND latent_separated
};

struct DissociationReport {
    Session session = Session::M1;
    DissociationThresholds thresholds;
    std::vector<PairEvidence> pairs; // all pairs, flagged or not

    std::vector<PairEvidence> flagged() const {
        std::vector<PairEvidence> out;
        for (const auto& p : pairs) {
            if (p.flagged) out.push_back(p);
        }
        return out;
    }
};

/// Flag condition pairs whose composite scores are statistically similar
/// while their embedded point clouds sit apart. The embedding must hold a
/// single session (SessionMismatchError) and every condition present in
/// either input must be present in both (MissingConditionError).
DissociationReport detect_dissociation(const std::vector<ScoreSummary>& summaries,
                                       const umap::EmbeddingResult& emb,
                                       const DissociationThresholds& thresholds = {});

/// Residual shape difference between two row-aligned point sets after
/// optimal translation, rotation/reflection, and uniform scaling,
/// normalized by total variance: 0 means identical shapes, 1 means no
/// shared shape. Symmetric in its arguments. Throws ShapeMismatchError.
double procrustes_disparity(const Matrix& a, const Matrix& b);

/// Rank-based neighborhood preservation in [0, 1]: penalizes embedded
/// k-neighbors that are not high-dimensional k-neighbors. Requires
/// k < N/2 (KTooLargeError).
double trustworthiness(const Matrix& high, const Matrix& low, std::size_t k);

struct RunPairStability {
    std::uint64_t seed_a = 0;
    std::uint64_t seed_b = 0;
    double ari = 0.0;
    double disparity = 0.0;
};

struct ConditionConsistency {
    Condition condition = Condition::ONL;
    double consistency = 0.0; // mean modal-cluster fraction across runs
};

struct StabilityReport {
    std::vector<std::uint64_t> seeds;
    double mean_ari = 0.0;
    double mean_disparity = 0.0;
    std::vector<RunPairStability> pairs;
    std::vector<ConditionConsistency> per_condition;
};

/// Embed once per seed, then compare runs pairwise: Procrustes disparity
/// of the coordinates and adjusted Rand index of seeded k-means
/// partitions (k = number of conditions present). Requires >= 2 seeds.
StabilityReport stability_assess(const FeatureMatrix& m, const umap::EmbedParams& params,
                                 const std::vector<std::uint64_t>& seeds);

} // namespace gait
