#pragma once

#include "gait/config.hpp"
#include "gait/dissociation.hpp"
#include "gait/level1.hpp"
#include "gait/level2.hpp"
#include "gait/preprocess.hpp"
#include "gait/umap/embed.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gait {

/// All report numbers use fixed decimal formatting: 2 decimals for scores
/// and relative changes, 4 for latent coordinates and diagnostics.
/// Non-finite diagnostics serialize as JSON null.

void write_scores_csv(std::ostream& out, const std::vector<ScoreRecord>& records);

void write_summary_csv(std::ostream& out, const std::vector<ScoreSummary>& summaries,
                       const std::vector<DeltaRecord>& deltas);

void write_dynamics_csv(std::ostream& out, const std::vector<CellDispersion>& cells);

void write_embedding_csv(std::ostream& out, const umap::EmbeddingResult& emb);

void write_dissociation_json(std::ostream& out, const DissociationReport& report);

void write_stability_json(std::ostream& out, const StabilityReport& report);

/// Static scatter of the embedding: color encodes condition, marker shape
/// encodes session, axes labeled as arbitrary units. No timestamps or
/// other run-varying metadata.
void write_embedding_svg(std::ostream& out, const umap::EmbeddingResult& emb);

/// Everything a full-pipeline run produced, for the aggregate document.
struct ReportBundle {
    std::string input;
    std::size_t rows_total = 0;
    std::size_t rows_linear = 0;
    PreprocessAudit audit;
    std::vector<ScoreSummary> summaries;
    std::vector<DeltaRecord> deltas;
    std::vector<CellDispersion> dynamics;
    const DissociationReport* dissociation = nullptr; // optional section
    const StabilityReport* stability = nullptr;       // optional section
};

void write_report_markdown(std::ostream& out, const ReportBundle& bundle);

/// Everything needed to repeat a run byte-for-byte (except the output
/// directory, which the repeat chooses freely).
struct RunManifest {
    std::string subcommand;
    std::string input;                // empty for generator runs
    std::string session = "both";     // M1 | M2 | both
    bool raw_scores = false;
    std::vector<std::uint64_t> seeds; // stability only
    std::string scenario;             // generator runs: reference | dissociation | spec
    std::size_t synth_n = 0;          // generator rows per cell (0 = subcommand default)
    std::string spec_path;            // generator spec file, when used
    RunConfig config;
};

void write_manifest(std::ostream& out, const RunManifest& manifest);
RunManifest load_manifest(const std::string& path);

} // namespace gait
