#include "gait/pipeline.hpp"

#include "gait/csv.hpp"
#include "gait/errors.hpp"
#include "gait/ingest.hpp"
#include "gait/level1.hpp"
#include "gait/level2.hpp"
#include "gait/preprocess.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace gait {

namespace {

namespace fs = std::filesystem;

/// Opens output files under one directory and deletes everything it wrote
/// if the run does not reach commit().
class OutputSet {
public:
    explicit OutputSet(const std::string& dir) : dir_(dir) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw IoError("cannot create output directory " + dir);
    }

    ~OutputSet() {
        if (committed_) return;
        for (const auto& path : written_) {
            std::error_code ec;
            fs::remove(path, ec); // best effort; nothing to report during unwind
        }
    }

    std::ofstream open(const std::string& name) {
        const std::string path = (fs::path(dir_) / name).string();
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open " + path + " for writing");
        written_.push_back(path);
        return out;
    }

    std::vector<std::string> commit() {
        committed_ = true;
        return written_;
    }

private:
    std::string dir_;
    std::vector<std::string> written_;
    bool committed_ = false;
};

Session parse_session_arg(const std::string& text) {
    const auto s = parse_session(text);
    if (!s) throw ConfigError("session must be M1, M2, or both, got \"" + text + "\"");
    return *s;
}

/// Load, keep linear phases, and apply the optional session filter.
GaitDataset load_filtered(const RunManifest& m, std::size_t& rows_total) {
    if (m.input.empty()) throw ConfigError(m.subcommand + " requires --input");
    GaitDataset ds = load_dataset(m.input);
    rows_total = ds.size();
    ds = filter_linear_phases(ds);
    if (m.session != "both") {
        const Session want = parse_session_arg(m.session);
        GaitDataset filtered;
        filtered.provenance = ds.provenance;
        for (const auto& obs : ds.observations) {
            if (obs.session == want) filtered.observations.push_back(obs);
        }
        if (filtered.empty()) throw EmptyAfterFilterError();
        ds = std::move(filtered);
    }
    return ds;
}

struct Level1Result {
    std::vector<ScoreRecord> scores;
    std::vector<ScoreSummary> summaries;
    std::vector<DeltaRecord> deltas;
};

Level1Result level1_from(const GaitDataset& ds, const FeatureMatrix& preprocessed,
                         bool raw_scores) {
    Level1Result out;
    out.scores = raw_scores ? compute_scores(ds) : compute_scores(preprocessed);
    out.summaries = summarize_scores(out.scores);
    out.deltas = compute_deltas(out.summaries);
    return out;
}

/// The session the dissociation detector runs on: an explicit request
/// wins; otherwise the baseline session if present, else the single
/// session the data holds.
Session dissociation_session(const RunManifest& m, const GaitDataset& ds) {
    if (m.session != "both") return parse_session_arg(m.session);
    for (const auto& obs : ds.observations) {
        if (obs.session == Session::M1) return Session::M1;
    }
    return Session::M2;
}

FeatureMatrix session_slice(const FeatureMatrix& m, Session s) {
    FeatureMatrix out;
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < m.labels.size(); ++r) {
        if (m.labels[r].session == s) rows.push_back(r);
    }
    out.values = Matrix(rows.size(), m.values.cols());
    out.labels.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < m.values.cols(); ++c) {
            out.values(i, c) = m.values(rows[i], c);
        }
        out.labels.push_back(m.labels[rows[i]]);
    }
    return out;
}

GaitDataset build_synthetic(const RunManifest& m) {
    if (!m.spec_path.empty()) {
        GeneratorSpec spec = load_generator_spec(m.spec_path);
        return generate_calibrated(spec);
    }
    if (m.scenario == "dissociation") {
        return m.synth_n > 0 ? dissociation_scenario(m.config.seed, m.synth_n)
                             : dissociation_scenario(m.config.seed);
    }
    if (m.scenario == "reference" || m.scenario.empty()) {
        const std::size_t n = m.synth_n > 0 ? m.synth_n : 500;
        return generate_calibrated(reference_spec(n, m.config.seed));
    }
    throw ConfigError("unknown scenario \"" + m.scenario + "\" (reference | dissociation)");
}

void write_manifest_file(OutputSet& outputs, const RunManifest& m) {
    auto out = outputs.open("run_manifest.txt");
    write_manifest(out, m);
}

} // namespace

GeneratorSpec load_generator_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open generator spec " + path);

    GeneratorSpec spec;
    std::map<std::size_t, CellSpec> cells;
    std::string line;
    std::size_t line_no = 0;

    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    auto parse_vector = [&](const std::string& value) {
        std::array<double, kFeatureCount> out{};
        std::istringstream parts(value);
        std::string token;
        std::size_t i = 0;
        while (parts >> token) {
            double v = 0.0;
            if (i >= kFeatureCount || !csv::parse_double(token, v)) {
                throw InvalidSpecError("line " + std::to_string(line_no) +
                                       ": expected 9 numbers");
            }
            out[i++] = v;
        }
        if (i != kFeatureCount) {
            throw InvalidSpecError("line " + std::to_string(line_no) + ": expected 9 numbers");
        }
        return out;
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw InvalidSpecError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "seed") {
            long long s = 0;
            if (!csv::parse_int(value, s) || s < 0) {
                throw InvalidSpecError("seed: bad value \"" + value + "\"");
            }
            spec.seed = static_cast<std::uint64_t>(s);
            continue;
        }

        // cell.<index>.<field>
        if (key.rfind("cell.", 0) != 0) throw InvalidSpecError("unknown key \"" + key + "\"");
        const auto dot = key.find('.', 5);
        if (dot == std::string::npos) throw InvalidSpecError("unknown key \"" + key + "\"");
        long long index = 0;
        if (!csv::parse_int(key.substr(5, dot - 5), index) || index < 0) {
            throw InvalidSpecError("bad cell index in \"" + key + "\"");
        }
        const std::string field = key.substr(dot + 1);
        CellSpec& cell = cells[static_cast<std::size_t>(index)];

        if (field == "condition") {
            const auto c = parse_condition(value);
            if (!c) throw InvalidSpecError("bad condition \"" + value + "\"");
            cell.condition = *c;
        } else if (field == "session") {
            const auto s = parse_session(value);
            if (!s) throw InvalidSpecError("bad session \"" + value + "\"");
            cell.session = *s;
        } else if (field == "n") {
            long long n = 0;
            if (!csv::parse_int(value, n) || n < 1) {
                throw InvalidSpecError("bad n \"" + value + "\"");
            }
            cell.n = static_cast<std::size_t>(n);
        } else if (field == "feature_mean") {
            cell.feature_mean = parse_vector(value);
        } else if (field == "feature_sd") {
            cell.feature_sd = parse_vector(value);
        } else if (field == "gpps_mean") {
            double v = 0.0;
            if (!csv::parse_double(value, v)) throw InvalidSpecError("bad gpps_mean");
            cell.target_gpps_mean = v;
        } else if (field == "gpps_sd") {
            double v = 0.0;
            if (!csv::parse_double(value, v)) throw InvalidSpecError("bad gpps_sd");
            cell.target_gpps_sd = v;
        } else {
            throw InvalidSpecError("unknown cell field \"" + field + "\"");
        }
    }

    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto it = cells.find(i);
        if (it == cells.end()) {
            throw InvalidSpecError("cell indices must be contiguous from 0");
        }
        spec.cells.push_back(it->second);
    }
    return spec;
}

std::vector<std::string> run_subcommand(const RunManifest& manifest,
                                        const std::string& out_dir) {
    OutputSet outputs(out_dir);
    const std::string& cmd = manifest.subcommand;

    if (cmd == "ingest") {
        std::size_t rows_total = 0;
        const GaitDataset ds = load_filtered(manifest, rows_total);
        std::cout << "parsed " << rows_total << " rows, kept " << ds.size()
                  << " after filtering\n";
        auto out = outputs.open("filtered.csv");
        serialize_dataset(ds, out);
        write_manifest_file(outputs, manifest);
        return outputs.commit();
    }

    if (cmd == "score") {
        std::size_t rows_total = 0;
        const GaitDataset ds = load_filtered(manifest, rows_total);
        const auto pre = preprocess_pipeline(ds, manifest.config.iqr_factor);
        const auto level1 = level1_from(ds, pre.matrix, manifest.raw_scores);
        {
            auto out = outputs.open("scores.csv");
            write_scores_csv(out, level1.scores);
        }
        {
            auto out = outputs.open("summary.csv");
            write_summary_csv(out, level1.summaries, level1.deltas);
        }
        write_manifest_file(outputs, manifest);
        return outputs.commit();
    }

    if (cmd == "dynamics") {
        std::size_t rows_total = 0;
        const GaitDataset ds = load_filtered(manifest, rows_total);
        const auto pre = preprocess_pipeline(ds, manifest.config.iqr_factor);
        const auto cells = dispersion_by_cell(pre.matrix);
        auto out = outputs.open("dynamics.csv");
        write_dynamics_csv(out, cells);
        write_manifest_file(outputs, manifest);
        return outputs.commit();
    }

    if (cmd == "embed") {
        std::size_t rows_total = 0;
        const GaitDataset ds = load_filtered(manifest, rows_total);
        const auto pre = preprocess_pipeline(ds, manifest.config.iqr_factor);
        const auto emb = umap::embed(pre.matrix, manifest.config.umap, manifest.config.seed);
        {
            auto out = outputs.open("embedding.csv");
            write_embedding_csv(out, emb);
        }
        {
            auto out = outputs.open("embedding.svg");
            write_embedding_svg(out, emb);
        }
        write_manifest_file(outputs, manifest);
        return outputs.commit();
    }

    if (cmd == "dissociate") {
        std::size_t rows_total = 0;
        const GaitDataset ds = load_filtered(manifest, rows_total);
        const Session session = dissociation_session(manifest, ds);
        const auto pre = preprocess_pipeline(ds, manifest.config.iqr_factor);
        const FeatureMatrix slice = session_slice(pre.matrix, session);
        if (slice.labels.empty()) throw EmptyAfterFilterError();
        const auto level1 = level1_from(ds, pre.matrix, manifest.raw_scores);
        const auto emb = umap::embed(slice, manifest.config.umap, manifest.config.seed);
        const auto report = detect_dissociation(level1.summaries, emb,
                                                manifest.config.dissociation);
        auto out = outputs.open("dissociation.json");
        write_dissociation_json(out, report);
        write_manifest_file(outputs, manifest);
        return outputs.commit();
    }

    if (cmd == "stability") {
        if (manifest.seeds.size() < 2) {
            throw ConfigError("stability requires --seeds with at least two values");
        }
        std::size_t rows_total = 0;
        const GaitDataset ds = load_filtered(manifest, rows_total);
        const auto pre = preprocess_pipeline(ds, manifest.config.iqr_factor);
        const auto report = stability_assess(pre.matrix, manifest.config.umap, manifest.seeds);
        auto out = outputs.open("stability.json");
        write_stability_json(out, report);
        write_manifest_file(outputs, manifest);
        return outputs.commit();
    }

    if (cmd == "synth") {
        const GaitDataset ds = build_synthetic(manifest);
        auto out = outputs.open("synthetic.csv");
        serialize_dataset(ds, out);
        write_manifest_file(outputs, manifest);
        return outputs.commit();
    }

    if (cmd == "report") {
        std::size_t rows_total = 0;
        const GaitDataset ds = load_filtered(manifest, rows_total);
        const auto pre = preprocess_pipeline(ds, manifest.config.iqr_factor);
        const auto level1 = level1_from(ds, pre.matrix, manifest.raw_scores);
        const auto dynamics = dispersion_by_cell(pre.matrix);

        const auto emb = umap::embed(pre.matrix, manifest.config.umap, manifest.config.seed);

        const Session diss_session = dissociation_session(manifest, ds);
        const FeatureMatrix slice = session_slice(pre.matrix, diss_session);
        const auto diss_emb =
            umap::embed(slice, manifest.config.umap, manifest.config.seed);
        const auto dissociation = detect_dissociation(level1.summaries, diss_emb,
                                                      manifest.config.dissociation);

        StabilityReport stability;
        const bool with_stability = manifest.seeds.size() >= 2;
        if (with_stability) {
            stability = stability_assess(pre.matrix, manifest.config.umap, manifest.seeds);
        }

        {
            auto out = outputs.open("scores.csv");
            write_scores_csv(out, level1.scores);
        }
        {
            auto out = outputs.open("summary.csv");
            write_summary_csv(out, level1.summaries, level1.deltas);
        }
        {
            auto out = outputs.open("dynamics.csv");
            write_dynamics_csv(out, dynamics);
        }
        {
            auto out = outputs.open("embedding.csv");
            write_embedding_csv(out, emb);
        }
        {
            auto out = outputs.open("embedding.svg");
            write_embedding_svg(out, emb);
        }
        {
            auto out = outputs.open("dissociation.json");
            write_dissociation_json(out, dissociation);
        }
        if (with_stability) {
            auto out = outputs.open("stability.json");
            write_stability_json(out, stability);
        }
        {
            ReportBundle bundle;
            bundle.input = manifest.input;
            bundle.rows_total = rows_total;
            bundle.rows_linear = ds.size();
            bundle.audit = pre.audit;
            bundle.summaries = level1.summaries;
            bundle.deltas = level1.deltas;
            bundle.dynamics = dynamics;
            bundle.dissociation = &dissociation;
            bundle.stability = with_stability ? &stability : nullptr;
            auto out = outputs.open("report.md");
            write_report_markdown(out, bundle);
        }
        write_manifest_file(outputs, manifest);
        return outputs.commit();
    }

    throw ConfigError("unknown subcommand \"" + cmd + "\"");
}

} // namespace gait
