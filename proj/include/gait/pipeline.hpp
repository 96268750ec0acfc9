#pragma once

#include "gait/report.hpp"
#include "gait/synth.hpp"

#include <string>
#include <vector>

namespace gait {

/// Parse a generator spec from flat key-value text:
///   seed = 3
///   cell.0.condition = ONL
///   cell.0.session = M1
///   cell.0.n = 500
///   cell.0.feature_mean = <nine space-separated numbers>
///   cell.0.feature_sd = <nine space-separated numbers>
///   cell.0.gpps_mean = 8.3
///   cell.0.gpps_sd = 1.5
/// Cell indices must be contiguous from 0.
GeneratorSpec load_generator_spec(const std::string& path);

/// Execute one subcommand described by the manifest, writing artifacts
/// into out_dir (created if needed) including the manifest itself.
/// Returns the paths written. On error, partially written files are
/// removed before the exception propagates.
std::vector<std::string> run_subcommand(const RunManifest& manifest,
                                        const std::string& out_dir);

} // namespace gait
