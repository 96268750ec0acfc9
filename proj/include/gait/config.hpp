#pragma once

#include "gait/dissociation.hpp"
#include "gait/umap/embed.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gait {

/// All tunables of the pipeline, with their defaults. Parsed from flat
/// `section.key = value` text files; every run echoes the effective
/// configuration into its manifest.
struct RunConfig {
    double iqr_factor = 1.5;
    std::string normalize_scope = "global"; // audit tag; only global exists
    umap::EmbedParams umap;
    DissociationThresholds dissociation;
    std::uint64_t seed = 42;
};

/// Apply one `section.key = value` assignment. Throws ConfigError on an
/// unknown key or unparsable value.
void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

/// Parse flat key-value text: one `key = value` per line, `#` comments
/// and blank lines ignored.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// The full key set in canonical order with current values — the inverse
/// of apply_config_key, used by manifests.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg);

} // namespace gait
