#include "gait/matrix.hpp"

namespace gait {

FeatureMatrix to_feature_matrix(const GaitDataset& ds) {
    FeatureMatrix m;
    m.values = Matrix(ds.size(), kFeatureCount);
    m.labels.reserve(ds.size());
    for (std::size_t r = 0; r < ds.size(); ++r) {
        const auto& obs = ds.observations[r];
        for (std::size_t f = 0; f < kFeatureCount; ++f) m.values(r, f) = obs.feature(f);
        m.labels.push_back({obs.obs_id, obs.session, obs.condition});
    }
    return m;
}

std::vector<std::size_t> rows_for(const FeatureMatrix& m, Condition c) {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < m.labels.size(); ++r) {
        if (m.labels[r].condition == c) out.push_back(r);
    }
    return out;
}

std::vector<std::size_t> rows_for(const FeatureMatrix& m, Condition c, Session s) {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < m.labels.size(); ++r) {
        if (m.labels[r].condition == c && m.labels[r].session == s) out.push_back(r);
    }
    return out;
}

std::vector<Condition> conditions_present(const FeatureMatrix& m) {
    bool present[6] = {};
    for (const auto& label : m.labels) present[static_cast<std::size_t>(label.condition)] = true;
    std::vector<Condition> out;
    for (Condition c : kAllConditions) {
        if (present[static_cast<std::size_t>(c)]) out.push_back(c);
    }
    return out;
}

} // namespace gait
