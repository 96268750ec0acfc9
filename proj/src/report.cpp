#include "gait/report.hpp"

#include "gait/csv.hpp"
#include "gait/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace gait {

namespace {

using csv::fixed2;
using csv::fixed4;

/// JSON value with fixed decimals; non-finite becomes null.
std::string json_num2(double v) { return std::isfinite(v) ? fixed2(v) : "null"; }
std::string json_num4(double v) { return std::isfinite(v) ? fixed4(v) : "null"; }

const char* bool_str(bool b) { return b ? "true" : "false"; }

} // namespace

void write_scores_csv(std::ostream& out, const std::vector<ScoreRecord>& records) {
    csv::write_row(out, {"obs_id", "session", "condition", "s_meca", "gpps"});
    for (const auto& r : records) {
        csv::write_row(out, {std::to_string(r.obs_id), to_string(r.session),
                             to_string(r.condition), fixed2(r.s_meca), fixed2(r.gpps)});
    }
}

void write_summary_csv(std::ostream& out, const std::vector<ScoreSummary>& summaries,
                       const std::vector<DeltaRecord>& deltas) {
    csv::write_row(out, {"condition", "m1_n", "m1_mean", "m1_sd", "m1_median", "m1_q1", "m1_q3",
                         "m2_n", "m2_mean", "m2_sd", "m2_median", "m2_q1", "m2_q3",
                         "delta_percent"});

    std::map<std::size_t, std::pair<const ScoreSummary*, const ScoreSummary*>> cells;
    for (const auto& s : summaries) {
        auto& slot = cells[static_cast<std::size_t>(s.condition)];
        (s.session == Session::M1 ? slot.first : slot.second) = &s;
    }
    std::map<std::size_t, const DeltaRecord*> delta_by_cond;
    for (const auto& d : deltas) delta_by_cond[static_cast<std::size_t>(d.condition)] = &d;

    for (const auto& [cond, slot] : cells) {
        std::vector<std::string> row;
        row.push_back(to_string(static_cast<Condition>(cond)));
        for (const ScoreSummary* s : {slot.first, slot.second}) {
            if (s) {
                row.push_back(std::to_string(s->n));
                row.push_back(fixed2(s->mean));
                row.push_back(fixed2(s->sd));
                row.push_back(fixed2(s->median));
                row.push_back(fixed2(s->q1));
                row.push_back(fixed2(s->q3));
            } else {
                row.insert(row.end(), 6, "");
            }
        }
        const auto it = delta_by_cond.find(cond);
        row.push_back(it != delta_by_cond.end() ? fixed2(it->second->delta_percent) : "");
        csv::write_row(out, row);
    }
}

void write_dynamics_csv(std::ostream& out, const std::vector<CellDispersion>& cells) {
    csv::write_row(out, {"condition", "session", "n_points", "mean_pairwise_dist",
                         "rms_centroid_dist", "path_length"});
    for (const auto& c : cells) {
        csv::write_row(out, {to_string(c.condition), to_string(c.session),
                             std::to_string(c.stats.n_points),
                             fixed4(c.stats.mean_pairwise_dist),
                             fixed4(c.stats.rms_centroid_dist), fixed4(c.stats.path_length)});
    }
}

void write_embedding_csv(std::ostream& out, const umap::EmbeddingResult& emb) {
    std::vector<std::string> header = {"obs_id", "session", "condition"};
    for (std::size_t c = 0; c < emb.z.cols(); ++c) {
        header.push_back("z" + std::to_string(c + 1));
    }
    csv::write_row(out, header);
    for (std::size_t r = 0; r < emb.z.rows(); ++r) {
        std::vector<std::string> row = {std::to_string(emb.labels[r].obs_id),
                                        to_string(emb.labels[r].session),
                                        to_string(emb.labels[r].condition)};
        for (std::size_t c = 0; c < emb.z.cols(); ++c) row.push_back(fixed4(emb.z(r, c)));
        csv::write_row(out, row);
    }
}

void write_dissociation_json(std::ostream& out, const DissociationReport& report) {
    out << "[\n";
    for (std::size_t i = 0; i < report.pairs.size(); ++i) {
        const auto& p = report.pairs[i];
        out << "  {\n";
        out << "    \"cond_i\": \"" << to_string(p.cond_i) << "\",\n";
        out << "    \"cond_j\": \"" << to_string(p.cond_j) << "\",\n";
        out << "    \"session\": \"" << to_string(report.session) << "\",\n";
        out << "    \"gpps_gap\": " << json_num2(p.gpps_gap) << ",\n";
        out << "    \"iqr_overlap\": " << bool_str(p.iqr_overlap) << ",\n";
        out << "    \"centroid_dist\": " << json_num4(p.separation.centroid_dist) << ",\n";
        out << "    \"pooled_spread\": " << json_num4(p.separation.pooled_spread) << ",\n";
        out << "    \"standardized_sep\": " << json_num4(p.separation.standardized_sep)
            << ",\n";
        out << "    \"silhouette\": " << json_num4(p.separation.silhouette) << ",\n";
        out << "    \"score_similar\": " << bool_str(p.score_similar) << ",\n";
        out << "    \"latent_separated\": " << bool_str(p.latent_separated) << ",\n";
        out << "    \"flagged\": " << bool_str(p.flagged) << ",\n";
        out << "    \"thresholds\": {\n";
        out << "      \"tau_score\": " << json_num2(p.tau_score) << ",\n";
        out << "      \"score_sd_fraction\": " << json_num2(report.thresholds.score_sd_fraction)
            << ",\n";
        out << "      \"min_standardized_sep\": "
            << json_num2(report.thresholds.min_standardized_sep) << ",\n";
        out << "      \"min_silhouette\": " << json_num2(report.thresholds.min_silhouette)
            << "\n";
        out << "    }\n";
        out << "  }" << (i + 1 < report.pairs.size() ? "," : "") << "\n";
    }
    out << "]\n";
}

void write_stability_json(std::ostream& out, const StabilityReport& report) {
    out << "{\n";
    out << "  \"seeds\": [";
    for (std::size_t i = 0; i < report.seeds.size(); ++i) {
        out << (i ? ", " : "") << report.seeds[i];
    }
    out << "],\n";
    out << "  \"mean_ari\": " << json_num4(report.mean_ari) << ",\n";
    out << "  \"mean_disparity\": " << json_num4(report.mean_disparity) << ",\n";
    out << "  \"pairs\": [\n";
    for (std::size_t i = 0; i < report.pairs.size(); ++i) {
        const auto& p = report.pairs[i];
        out << "    {\"seed_a\": " << p.seed_a << ", \"seed_b\": " << p.seed_b
            << ", \"ari\": " << json_num4(p.ari) << ", \"disparity\": "
            << json_num4(p.disparity) << "}" << (i + 1 < report.pairs.size() ? "," : "")
            << "\n";
    }
    out << "  ],\n";
    out << "  \"per_condition\": [\n";
    for (std::size_t i = 0; i < report.per_condition.size(); ++i) {
        const auto& c = report.per_condition[i];
        out << "    {\"condition\": \"" << to_string(c.condition)
            << "\", \"consistency\": " << json_num4(c.consistency) << "}"
            << (i + 1 < report.per_condition.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
}

namespace {

const char* condition_color(Condition c) {
    // Colorblind-safe palette, fixed per condition.
    switch (c) {
    case Condition::ONL: return "#0072B2";
    case Condition::OSL: return "#E69F00";
    case Condition::OBL: return "#009E73";
    case Condition::OC2_5: return "#CC79A7";
    case Condition::OC3: return "#56B4E9";
    case Condition::OC3P: return "#D55E00";
    }
    return "#000000";
}

} // namespace

void write_embedding_svg(std::ostream& out, const umap::EmbeddingResult& emb) {
    const double width = 720.0, height = 540.0;
    const double ml = 70.0, mr = 190.0, mt = 40.0, mb = 60.0;
    const double plot_w = width - ml - mr;
    const double plot_h = height - mt - mb;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    if (emb.z.rows() > 0) {
        x_min = x_max = emb.z(0, 0);
        y_min = y_max = emb.z.cols() > 1 ? emb.z(0, 1) : 0.0;
        for (std::size_t r = 0; r < emb.z.rows(); ++r) {
            x_min = std::min(x_min, emb.z(r, 0));
            x_max = std::max(x_max, emb.z(r, 0));
            if (emb.z.cols() > 1) {
                y_min = std::min(y_min, emb.z(r, 1));
                y_max = std::max(y_max, emb.z(r, 1));
            }
        }
    }
    const double x_pad = std::max((x_max - x_min) * 0.05, 1e-9);
    const double y_pad = std::max((y_max - y_min) * 0.05, 1e-9);
    x_min -= x_pad;
    x_max += x_pad;
    y_min -= y_pad;
    y_max += y_pad;

    auto sx = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) { return mt + (y_max - y) / (y_max - y_min) * plot_h; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << ml + plot_w / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">Latent embedding (n = "
        << emb.z.rows() << ")</text>\n";

    // Frame and axis labels; latent axes carry no physical units.
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << plot_w << "\" height=\""
        << plot_h << "\" fill=\"none\" stroke=\"#888888\"/>\n";
    out << "<text x=\"" << ml + plot_w / 2 << "\" y=\"" << height - 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">latent-1 "
           "(arbitrary units)</text>\n";
    out << "<text x=\"22\" y=\"" << mt + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 22 "
        << mt + plot_h / 2 << ")\">latent-2 (arbitrary units)</text>\n";

    for (std::size_t r = 0; r < emb.z.rows(); ++r) {
        const double px = sx(emb.z(r, 0));
        const double py = sy(emb.z.cols() > 1 ? emb.z(r, 1) : 0.0);
        const char* color = condition_color(emb.labels[r].condition);
        if (emb.labels[r].session == Session::M1) {
            out << "<circle cx=\"" << fixed2(px) << "\" cy=\"" << fixed2(py)
                << "\" r=\"3\" fill=\"" << color << "\" fill-opacity=\"0.75\"/>\n";
        } else {
            out << "<rect x=\"" << fixed2(px - 2.6) << "\" y=\"" << fixed2(py - 2.6)
                << "\" width=\"5.2\" height=\"5.2\" fill=\"" << color
                << "\" fill-opacity=\"0.75\"/>\n";
        }
    }

    // Legend: conditions by color, sessions by shape.
    double ly = mt + 10.0;
    const double lx = width - mr + 18.0;
    out << "<text x=\"" << lx << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"12\" font-weight=\"bold\">Condition"
           "</text>\n";
    ly += 8.0;
    for (Condition c : kAllConditions) {
        bool present = false;
        for (const auto& label : emb.labels) {
            if (label.condition == c) {
                present = true;
                break;
            }
        }
        if (!present) continue;
        ly += 18.0;
        out << "<circle cx=\"" << lx + 6 << "\" cy=\"" << ly - 4 << "\" r=\"4\" fill=\""
            << condition_color(c) << "\"/>\n";
        out << "<text x=\"" << lx + 18 << "\" y=\"" << ly
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << to_string(c)
            << "</text>\n";
    }
    ly += 28.0;
    out << "<text x=\"" << lx << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"12\" font-weight=\"bold\">Session"
           "</text>\n";
    ly += 18.0;
    out << "<circle cx=\"" << lx + 6 << "\" cy=\"" << ly - 4
        << "\" r=\"4\" fill=\"#555555\"/>\n";
    out << "<text x=\"" << lx + 18 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"12\">M1</text>\n";
    ly += 18.0;
    out << "<rect x=\"" << lx + 2 << "\" y=\"" << ly - 11
        << "\" width=\"8\" height=\"8\" fill=\"#555555\"/>\n";
    out << "<text x=\"" << lx + 18 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"12\">M2</text>\n";

    out << "</svg>\n";
}

void write_report_markdown(std::ostream& out, const ReportBundle& bundle) {
    out << "# Gait analysis report\n\n";
    out << "Input: `" << bundle.input << "`\n\n";
    out << "- rows parsed: " << bundle.rows_total << "\n";
    out << "- linear-phase rows kept: " << bundle.rows_linear << "\n";
    out << "- outliers replaced: " << bundle.audit.total_replaced() << " (IQR factor "
        << csv::format_double(bundle.audit.iqr_factor) << ")\n\n";

    out << "## Composite scores by condition\n\n";
    out << "| condition | session | n | mean | sd | median | q1 | q3 |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& s : bundle.summaries) {
        out << "| " << to_string(s.condition) << " | " << to_string(s.session) << " | " << s.n
            << " | " << fixed2(s.mean) << " | " << fixed2(s.sd) << " | " << fixed2(s.median)
            << " | " << fixed2(s.q1) << " | " << fixed2(s.q3) << " |\n";
    }
    out << "\n";

    if (!bundle.deltas.empty()) {
        out << "## Between-session change\n\n";
        out << "| condition | M1 mean | M2 mean | delta (%) |\n";
        out << "|---|---|---|---|\n";
        for (const auto& d : bundle.deltas) {
            out << "| " << to_string(d.condition) << " | " << fixed2(d.gpps_m1_mean) << " | "
                << fixed2(d.gpps_m2_mean) << " | " << fixed2(d.delta_percent) << " |\n";
        }
        out << "\n";
    }

    if (!bundle.dynamics.empty()) {
        out << "## Trajectory dispersion\n\n";
        out << "| condition | session | points | mean pairwise | rms centroid | path length |\n";
        out << "|---|---|---|---|---|---|\n";
        for (const auto& c : bundle.dynamics) {
            out << "| " << to_string(c.condition) << " | " << to_string(c.session) << " | "
                << c.stats.n_points << " | " << fixed4(c.stats.mean_pairwise_dist) << " | "
                << fixed4(c.stats.rms_centroid_dist) << " | " << fixed4(c.stats.path_length)
                << " |\n";
        }
        out << "\n";
    }

    if (bundle.dissociation) {
        out << "## Score-similar, latent-separated pairs (session "
            << to_string(bundle.dissociation->session) << ")\n\n";
        const auto flagged = bundle.dissociation->flagged();
        if (flagged.empty()) {
            out << "No pair met both predicates.\n\n";
        } else {
            out << "| pair | score gap | standardized sep | silhouette |\n";
            out << "|---|---|---|---|\n";
            for (const auto& p : flagged) {
                out << "| " << to_string(p.cond_i) << " / " << to_string(p.cond_j) << " | "
                    << fixed2(p.gpps_gap) << " | " << fixed4(p.separation.standardized_sep)
                    << " | " << fixed4(p.separation.silhouette) << " |\n";
            }
            out << "\nSimilar aggregate scores with separated latent regions mean the\n"
                   "composite alone cannot identify the underlying organization; this is\n"
                   "reported as an analytic observation, not a clinical recommendation.\n\n";
        }
    }

    if (bundle.stability) {
        out << "## Embedding stability across seeds\n\n";
        out << "- seeds: ";
        for (std::size_t i = 0; i < bundle.stability->seeds.size(); ++i) {
            out << (i ? ", " : "") << bundle.stability->seeds[i];
        }
        out << "\n- mean adjusted Rand index: " << fixed4(bundle.stability->mean_ari) << "\n";
        out << "- mean shape disparity: " << fixed4(bundle.stability->mean_disparity)
            << "\n\n";
    }

    out << "Latent coordinates are unitless; distances in the embedding carry no\n"
           "physical meaning and are read only through shape statistics.\n";
}

void write_manifest(std::ostream& out, const RunManifest& manifest) {
    out << "# run manifest (reproduce with: gaitlevels rerun --manifest <this file>)\n";
    out << "manifest.version = 1\n";
    out << "artifact.version = 1.0.0\n";
    out << "subcommand = " << manifest.subcommand << "\n";
    if (!manifest.input.empty()) out << "input = " << manifest.input << "\n";
    out << "session = " << manifest.session << "\n";
    out << "raw_scores = " << (manifest.raw_scores ? "true" : "false") << "\n";
    if (!manifest.seeds.empty()) {
        out << "seeds = ";
        for (std::size_t i = 0; i < manifest.seeds.size(); ++i) {
            out << (i ? "," : "") << manifest.seeds[i];
        }
        out << "\n";
    }
    if (!manifest.scenario.empty()) out << "scenario = " << manifest.scenario << "\n";
    if (manifest.synth_n > 0) out << "synth_n = " << manifest.synth_n << "\n";
    if (!manifest.spec_path.empty()) out << "spec = " << manifest.spec_path << "\n";
    for (const auto& [key, value] : config_entries(manifest.config)) {
        out << key << " = " << value << "\n";
    }
}

RunManifest load_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open manifest " + path);

    RunManifest manifest;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line;
        if (!stripped.empty() && stripped.back() == '\r') stripped.pop_back();
        const auto begin = stripped.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        if (stripped[begin] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("manifest line " + std::to_string(line_no) +
                              ": expected key = value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "manifest.version") {
            if (value != "1") throw ConfigError("unsupported manifest version " + value);
        } else if (key == "artifact.version") {
            // informational
        } else if (key == "subcommand") {
            manifest.subcommand = value;
        } else if (key == "input") {
            manifest.input = value;
        } else if (key == "session") {
            manifest.session = value;
        } else if (key == "raw_scores") {
            manifest.raw_scores = value == "true";
        } else if (key == "seeds") {
            manifest.seeds.clear();
            std::istringstream parts(value);
            std::string token;
            while (std::getline(parts, token, ',')) {
                long long s = 0;
                if (!csv::parse_int(token, s) || s < 0) {
                    throw ConfigError("manifest seeds: bad value \"" + token + "\"");
                }
                manifest.seeds.push_back(static_cast<std::uint64_t>(s));
            }
        } else if (key == "scenario") {
            manifest.scenario = value;
        } else if (key == "synth_n") {
            long long n = 0;
            if (!csv::parse_int(value, n) || n < 0) {
                throw ConfigError("manifest synth_n: bad value \"" + value + "\"");
            }
            manifest.synth_n = static_cast<std::size_t>(n);
        } else if (key == "spec") {
            manifest.spec_path = value;
        } else {
            apply_config_key(manifest.config, key, value);
        }
    }
    if (manifest.subcommand.empty()) throw ConfigError("manifest has no subcommand");
    return manifest;
}

} // namespace gait
