#include "gait/ingest.hpp"

#include "gait/csv.hpp"
#include "gait/errors.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace gait {

namespace {

constexpr const char* kLabelColumns[] = {"obs_id", "session", "condition", "phase"};

std::size_t column_index(const csv::Table& t, const std::string& name) {
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (t.header[i] == name) return i;
    }
    throw MissingColumnError(name);
}

} // namespace

GaitDataset parse_dataset_string(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    return parse_dataset(in, source_name);
}

GaitDataset parse_dataset(std::istream& in, const std::string& source_name) {
    csv::Table table;
    try {
        table = csv::read(in);
    } catch (const EmptyFileError&) {
        throw EmptyFileError(source_name);
    }
    if (table.rows.empty()) throw EmptyFileError(source_name);

    std::size_t label_idx[4];
    for (std::size_t i = 0; i < 4; ++i) label_idx[i] = column_index(table, kLabelColumns[i]);
    std::size_t feature_idx[kFeatureCount];
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        feature_idx[i] = column_index(table, kFeatureNames[i]);
    }

    GaitDataset ds;
    ds.provenance = source_name;
    ds.observations.reserve(table.rows.size());
    std::unordered_set<long long> seen_ids;

    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t row_no = r + 1; // 1-based data row for messages
        GaitObservation obs;

        if (!csv::parse_int(row[label_idx[0]], obs.obs_id)) {
            throw NonNumericError(row_no, "obs_id", row[label_idx[0]]);
        }
        if (!seen_ids.insert(obs.obs_id).second) {
            throw DuplicateIdError(row_no, obs.obs_id);
        }

        const auto session = parse_session(row[label_idx[1]]);
        if (!session) throw BadLabelError(row_no, row[label_idx[1]], session_label_list());
        obs.session = *session;

        const auto condition = parse_condition(row[label_idx[2]]);
        if (!condition) throw BadLabelError(row_no, row[label_idx[2]], condition_label_list());
        obs.condition = *condition;

        const auto phase = parse_phase(row[label_idx[3]]);
        if (!phase) throw BadLabelError(row_no, row[label_idx[3]], phase_label_list());
        obs.phase = *phase;

        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            double value = 0.0;
            if (!csv::parse_double(row[feature_idx[f]], value)) {
                throw NonNumericError(row_no, kFeatureNames[f], row[feature_idx[f]]);
            }
            obs.set_feature(f, value);
        }
        ds.observations.push_back(obs);
    }
    return ds;
}

GaitDataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return parse_dataset(in, path);
}

void serialize_dataset(const GaitDataset& ds, std::ostream& out) {
    std::vector<std::string> fields = {"obs_id", "session", "condition", "phase"};
    for (const char* name : kFeatureNames) fields.push_back(name);
    csv::write_row(out, fields);

    for (const auto& obs : ds.observations) {
        fields.clear();
        fields.push_back(std::to_string(obs.obs_id));
        fields.push_back(to_string(obs.session));
        fields.push_back(to_string(obs.condition));
        fields.push_back(to_string(obs.phase));
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            fields.push_back(csv::format_double(obs.feature(f)));
        }
        csv::write_row(out, fields);
    }
}

std::string serialize_dataset_string(const GaitDataset& ds) {
    std::ostringstream out;
    serialize_dataset(ds, out);
    return out.str();
}

void save_dataset(const GaitDataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    serialize_dataset(ds, out);
    if (!out) throw IoError("write failed: " + path);
}

GaitDataset filter_linear_phases(const GaitDataset& ds) {
    GaitDataset out;
    out.provenance = ds.provenance;
    for (const auto& obs : ds.observations) {
        if (obs.phase == Phase::Linear) out.observations.push_back(obs);
    }
    if (out.observations.empty()) throw EmptyAfterFilterError();
    return out;
}

} // namespace gait
