#include "gait/synth.hpp"

#include "gait/errors.hpp"
#include "gait/level1.hpp"
#include "gait/rng.hpp"
#include "gait/stats.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace gait {

namespace {

double weight_norm_sq() {
    double sum = 0.0;
    for (double w : kGppsWeights) sum += w * w;
    return sum;
}

/// Factor A with A·Aᵀ = covariance, via eigendecomposition so that PSD
/// inputs with tiny negative rounding eigenvalues still factor.
Eigen::MatrixXd psd_factor(const Matrix& cov) {
    const auto p = static_cast<Eigen::Index>(kFeatureCount);
    Eigen::MatrixXd c(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) {
            c(i, j) = cov(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c);
    if (es.info() != Eigen::Success) throw InvalidSpecError("covariance eigensolve failed");
    const Eigen::VectorXd& lambda = es.eigenvalues();
    const double scale = std::max(lambda.cwiseAbs().maxCoeff(), 1.0);
    Eigen::VectorXd sqrt_lambda(p);
    for (Eigen::Index i = 0; i < p; ++i) {
        if (lambda[i] < -1e-10 * scale) {
            throw InvalidSpecError("covariance is not positive semi-definite");
        }
        sqrt_lambda[i] = std::sqrt(std::max(lambda[i], 0.0));
    }
    return es.eigenvectors() * sqrt_lambda.asDiagonal();
}

void validate_cell(const CellSpec& cell) {
    if (cell.n == 0) throw InvalidSpecError("cell with n = 0");
    if (cell.target_gpps_sd < 0.0) throw InvalidSpecError("negative target score SD");
    for (double sd : cell.feature_sd) {
        if (sd < 0.0) throw InvalidSpecError("negative feature SD");
    }
    if (cell.covariance) {
        if (cell.covariance->rows() != kFeatureCount ||
            cell.covariance->cols() != kFeatureCount) {
            throw InvalidSpecError("covariance must be 9x9");
        }
    }
}

} // namespace

GaitDataset generate_calibrated(const GeneratorSpec& spec) {
    if (spec.cells.empty()) throw InvalidSpecError("no cells");
    const double w_sq = weight_norm_sq();

    GaitDataset ds;
    ds.provenance = "synthetic: calibrated generator (seed " + std::to_string(spec.seed) + ")";
    long long next_id = 1;

    for (std::size_t ci = 0; ci < spec.cells.size(); ++ci) {
        const CellSpec& cell = spec.cells[ci];
        validate_cell(cell);
        Rng rng = Rng::child(spec.seed, ci);

        // Population moment matching: shift the mean along the weight
        // vector, scale the covariance so the score variance is on target.
        double base_score = 0.0;
        for (std::size_t j = 0; j < kFeatureCount; ++j) {
            base_score += kGppsWeights[j] * cell.feature_mean[j];
        }
        std::array<double, kFeatureCount> mean = cell.feature_mean;
        const double shift = (cell.target_gpps_mean - base_score) / w_sq;
        for (std::size_t j = 0; j < kFeatureCount; ++j) mean[j] += kGppsWeights[j] * shift;

        double score_var = 0.0;
        Eigen::MatrixXd factor; // used only in the full-covariance model
        if (cell.covariance) {
            factor = psd_factor(*cell.covariance);
            Eigen::VectorXd w(static_cast<Eigen::Index>(kFeatureCount));
            for (std::size_t j = 0; j < kFeatureCount; ++j) {
                w[static_cast<Eigen::Index>(j)] = kGppsWeights[j];
            }
            score_var = (factor.transpose() * w).squaredNorm();
        } else {
            for (std::size_t j = 0; j < kFeatureCount; ++j) {
                const double ws = kGppsWeights[j] * cell.feature_sd[j];
                score_var += ws * ws;
            }
        }
        double scale = 0.0;
        if (cell.target_gpps_sd > 0.0) {
            if (score_var <= 0.0) {
                throw InvalidSpecError("zero score variance cannot reach a positive SD target");
            }
            scale = cell.target_gpps_sd / std::sqrt(score_var);
        }

        // Draws. Feature order inside a row is fixed so the stream is
        // reproducible no matter how the caller consumes the dataset.
        std::vector<GaitObservation> block(cell.n);
        std::vector<double> scores(cell.n);
        for (std::size_t i = 0; i < cell.n; ++i) {
            GaitObservation obs;
            obs.obs_id = next_id++;
            obs.session = cell.session;
            obs.condition = cell.condition;
            obs.phase = Phase::Linear;

            if (cell.covariance) {
                Eigen::VectorXd xi(static_cast<Eigen::Index>(kFeatureCount));
                for (std::size_t j = 0; j < kFeatureCount; ++j) {
                    xi[static_cast<Eigen::Index>(j)] = rng.normal();
                }
                Eigen::VectorXd noise = factor * xi;
                for (std::size_t j = 0; j < kFeatureCount; ++j) {
                    obs.set_feature(j, mean[j] + scale * noise[static_cast<Eigen::Index>(j)]);
                }
            } else {
                for (std::size_t j = 0; j < kFeatureCount; ++j) {
                    obs.set_feature(j, mean[j] + scale * cell.feature_sd[j] * rng.normal());
                }
            }
            scores[i] = gpps(obs);
            block[i] = obs;
        }

        // Empirical pinning: affine correction along the weight vector so
        // the cell's sample score mean and SD equal the targets exactly.
        const double sample_mean = stats::mean(scores);
        const double sample_sd = stats::sample_sd(scores);
        const double ratio = sample_sd > 0.0 ? cell.target_gpps_sd / sample_sd : 0.0;
        for (std::size_t i = 0; i < cell.n; ++i) {
            const double corrected =
                cell.target_gpps_mean + (scores[i] - sample_mean) * ratio;
            const double step = (corrected - scores[i]) / w_sq;
            for (std::size_t j = 0; j < kFeatureCount; ++j) {
                block[i].set_feature(j, block[i].feature(j) + kGppsWeights[j] * step);
            }
        }
        ds.observations.insert(ds.observations.end(), block.begin(), block.end());
    }
    return ds;
}

GeneratorSpec reference_spec(std::size_t n_per_cell, std::uint64_t seed) {
    // Base feature Gaussian shared by all cells; the calibration shifts it
    // per cell. Chosen at gait-like magnitudes with the capacitive index
    // absorbing the score offset.
    const std::array<double, kFeatureCount> mean = {1.15, 108.0, 0.55, 0.08, 0.07,
                                                    0.06, 0.65,  5.0,  -9.0};
    const std::array<double, kFeatureCount> sd = {0.10, 4.0,  0.05, 0.03, 0.03,
                                                  0.03, 0.05, 1.0,  0.8};

    struct Target {
        Condition condition;
        double m1_mean, m1_sd, m2_mean, m2_sd;
    };
    const Target targets[] = {
        {Condition::ONL, 8.3, 1.5, 8.5, 1.4},  {Condition::OSL, 7.9, 1.3, 7.9, 1.2},
        {Condition::OBL, 6.2, 1.6, 6.5, 1.5},  {Condition::OC2_5, 9.1, 1.2, 9.4, 1.2},
        {Condition::OC3, 8.8, 1.3, 9.1, 1.2},  {Condition::OC3P, 7.5, 1.4, 7.8, 1.3},
    };

    GeneratorSpec spec;
    spec.seed = seed;
    for (const Target& t : targets) {
        for (Session s : kAllSessions) {
            CellSpec cell;
            cell.condition = t.condition;
            cell.session = s;
            cell.n = n_per_cell;
            cell.feature_mean = mean;
            cell.feature_sd = sd;
            cell.target_gpps_mean = s == Session::M1 ? t.m1_mean : t.m2_mean;
            cell.target_gpps_sd = s == Session::M1 ? t.m1_sd : t.m2_sd;
            spec.cells.push_back(cell);
        }
    }
    return spec;
}

ScenarioDesign dissociation_scenario_design() { return {}; }

GaitDataset dissociation_scenario(std::uint64_t seed, std::size_t n_per_cell) {
    const ScenarioDesign design = dissociation_scenario_design();

    // Shared base point and per-feature uniform noise half-widths.
    const std::array<double, kFeatureCount> base = {1.15, 1.90, 0.54, 0.32, 0.10,
                                                    0.11, 0.63, 6.20, 6.50};
    const std::array<double, kFeatureCount> half_width = {0.05, 0.05, 0.05, 0.05, 0.05,
                                                          0.05, 0.05, 0.25, 0.10};

    // The dissociating pair trades step time against temporal asymmetry:
    // both carry weight −0.10, so the swap is score-neutral by
    // construction while moving the clouds apart in feature space.
    std::array<double, kFeatureCount> offset_a = {};
    offset_a[kStepTime] = 0.25;
    offset_a[kAsymTemporal] = -0.25;
    std::array<double, kFeatureCount> offset_b = {};
    offset_b[kStepTime] = -0.25;
    offset_b[kAsymTemporal] = 0.25;

    // Control condition: clearly lower score through the weighted columns.
    const std::array<double, kFeatureCount> offset_control = {-0.25, -0.35, 0.0,  0.0, 0.8,
                                                              0.8,   -0.15, -2.0, -1.6};

    struct Cell {
        Condition condition;
        const std::array<double, kFeatureCount>& offset;
    };
    const Cell cells[] = {
        {design.pair_a, offset_a},
        {design.pair_b, offset_b},
        {design.control, offset_control},
    };

    GaitDataset ds;
    ds.provenance = "synthetic: dissociation scenario (seed " + std::to_string(seed) + ")";
    long long next_id = 1;
    for (std::size_t ci = 0; ci < 3; ++ci) {
        Rng rng = Rng::child(seed, ci);
        for (std::size_t i = 0; i < n_per_cell; ++i) {
            GaitObservation obs;
            obs.obs_id = next_id++;
            obs.session = Session::M1;
            obs.condition = cells[ci].condition;
            obs.phase = Phase::Linear;
            for (std::size_t j = 0; j < kFeatureCount; ++j) {
                obs.set_feature(j, base[j] + cells[ci].offset[j] +
                                       rng.uniform(-half_width[j], half_width[j]));
            }
            ds.observations.push_back(obs);
        }
    }
    return ds;
}

} // namespace gait
