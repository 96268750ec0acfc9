#pragma once

#include "gait/dataset.hpp"
#include "gait/matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace gait {

/// One (condition, session) cell of the generator: a base Gaussian for the
/// nine features plus the composite-score moments the cell must hit.
struct CellSpec {
    Condition condition = Condition::ONL;
    Session session = Session::M1;
    std::size_t n = 0;

    std::array<double, kFeatureCount> feature_mean = {};
    // Diagonal model by default; a full 9x9 covariance takes precedence
    // when present.
    std::array<double, kFeatureCount> feature_sd = {};
    std::optional<Matrix> covariance;

    double target_gpps_mean = 0.0;
    double target_gpps_sd = 0.0;
};

struct GeneratorSpec {
    std::vector<CellSpec> cells;
    std::uint64_t seed = 0;
};

/// Draw Gaussian features per cell, first moment-matched in population
/// (mean shifted along the score weight vector, covariance scaled so the
/// score variance hits the target), then pinned empirically: an affine
/// correction along the weight vector makes each cell's raw-score sample
/// mean and SD equal the targets exactly. Deterministic per seed; each
/// cell draws from its own stream. Throws InvalidSpecError on negative
/// SDs, non-PSD covariance, or a zero-variance score direction with a
/// positive SD target.
GaitDataset generate_calibrated(const GeneratorSpec& spec);

/// Reference six-condition, two-session spec with published score targets.
GeneratorSpec reference_spec(std::size_t n_per_cell, std::uint64_t seed);

/// Three-condition single-session set built so that two conditions have
/// equal score distributions (their feature offsets lie in the null space
/// of the score weight vector) yet occupy disjoint feature-space regions,
/// plus one clearly lower-scoring control condition.
GaitDataset dissociation_scenario(std::uint64_t seed, std::size_t n_per_cell = 300);

/// The two conditions constructed to dissociate, and the control.
struct ScenarioDesign {
    Condition pair_a = Condition::OC2_5;
    Condition pair_b = Condition::OC3;
    Condition control = Condition::OBL;
};
ScenarioDesign dissociation_scenario_design();

} // namespace gait
