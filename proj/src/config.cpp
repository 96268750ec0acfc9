#include "gait/config.hpp"

#include "gait/csv.hpp"
#include "gait/errors.hpp"

#include <fstream>
#include <sstream>

namespace gait {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& key, const std::string& value) {
    double out = 0.0;
    if (!csv::parse_double(value, out)) {
        throw ConfigError(key + ": \"" + value + "\" is not a number");
    }
    return out;
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
    long long out = 0;
    if (!csv::parse_int(value, out) || out < 0) {
        throw ConfigError(key + ": \"" + value + "\" is not a non-negative integer");
    }
    return static_cast<std::uint64_t>(out);
}

} // namespace

void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "iqr.factor") {
        const double f = parse_real(key, value);
        if (f <= 0.0) throw ConfigError("iqr.factor must be > 0");
        cfg.iqr_factor = f;
    } else if (key == "normalize.scope") {
        if (value != "global") {
            throw ConfigError("normalize.scope: only \"global\" is supported");
        }
        cfg.normalize_scope = value;
    } else if (key == "umap.n_neighbors") {
        const auto k = parse_count(key, value);
        if (k < 1) throw ConfigError("umap.n_neighbors must be >= 1");
        cfg.umap.n_neighbors = static_cast<std::size_t>(k);
    } else if (key == "umap.min_dist") {
        cfg.umap.min_dist = parse_real(key, value);
    } else if (key == "umap.spread") {
        cfg.umap.spread = parse_real(key, value);
    } else if (key == "umap.epochs") {
        cfg.umap.epochs = static_cast<std::size_t>(parse_count(key, value));
    } else if (key == "umap.negative_samples") {
        cfg.umap.negative_samples = static_cast<std::size_t>(parse_count(key, value));
    } else if (key == "umap.init") {
        if (value == "spectral") {
            cfg.umap.init = umap::EmbedParams::Init::Spectral;
        } else if (value == "random") {
            cfg.umap.init = umap::EmbedParams::Init::Random;
        } else {
            throw ConfigError("umap.init must be spectral or random, got \"" + value + "\"");
        }
    } else if (key == "dissociation.score_sd_fraction") {
        cfg.dissociation.score_sd_fraction = parse_real(key, value);
    } else if (key == "dissociation.min_standardized_sep") {
        cfg.dissociation.min_standardized_sep = parse_real(key, value);
    } else if (key == "dissociation.min_silhouette") {
        cfg.dissociation.min_silhouette = parse_real(key, value);
    } else if (key == "seed") {
        cfg.seed = parse_count(key, value);
    } else {
        throw ConfigError("unknown key \"" + key + "\"");
    }
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        apply_config_key(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("iqr.factor", csv::format_double(cfg.iqr_factor));
    out.emplace_back("normalize.scope", cfg.normalize_scope);
    out.emplace_back("umap.n_neighbors", std::to_string(cfg.umap.n_neighbors));
    out.emplace_back("umap.min_dist", csv::format_double(cfg.umap.min_dist));
    out.emplace_back("umap.spread", csv::format_double(cfg.umap.spread));
    out.emplace_back("umap.epochs", std::to_string(cfg.umap.epochs));
    out.emplace_back("umap.negative_samples", std::to_string(cfg.umap.negative_samples));
    out.emplace_back("umap.init",
                     cfg.umap.init == umap::EmbedParams::Init::Spectral ? "spectral" : "random");
    out.emplace_back("dissociation.score_sd_fraction",
                     csv::format_double(cfg.dissociation.score_sd_fraction));
    out.emplace_back("dissociation.min_standardized_sep",
                     csv::format_double(cfg.dissociation.min_standardized_sep));
    out.emplace_back("dissociation.min_silhouette",
                     csv::format_double(cfg.dissociation.min_silhouette));
    out.emplace_back("seed", std::to_string(cfg.seed));
    return out;
}

} // namespace gait
