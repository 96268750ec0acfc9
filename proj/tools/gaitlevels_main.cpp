// gaitlevels — composite gait scoring, trajectory dispersion, latent
// embedding, and dissociation detection, driven by subcommands.

#include "CLI11.hpp"

#include "gait/config.hpp"
#include "gait/csv.hpp"
#include "gait/errors.hpp"
#include "gait/pipeline.hpp"
#include "gait/report.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliOptions {
    std::string input;
    std::string out;
    std::string config_path;
    long long seed = -1; // -1: keep the config/default seed
    std::string seeds;   // comma-separated, stability runs
    std::string session = "both";
    bool raw_scores = false;

    // synth only
    std::string scenario = "reference";
    std::size_t synth_n = 0;
    std::string spec_path;

    // rerun only
    std::string manifest_path;
};

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    if (text.empty()) return seeds;
    std::istringstream parts(text);
    std::string token;
    while (std::getline(parts, token, ',')) {
        long long s = 0;
        if (!gait::csv::parse_int(token, s) || s < 0) {
            throw gait::ConfigError("--seeds: bad value \"" + token + "\"");
        }
        seeds.push_back(static_cast<std::uint64_t>(s));
    }
    return seeds;
}

std::string resolve_out_dir(const CliOptions& opt) {
    if (!opt.out.empty()) return opt.out;
    if (const char* env = std::getenv("GAITLEVELS_OUT"); env && *env) return env;
    throw gait::ConfigError("no output directory: pass --out or set GAITLEVELS_OUT");
}

gait::RunManifest build_manifest(const CliOptions& opt, const std::string& subcommand) {
    gait::RunManifest m;
    m.subcommand = subcommand;
    m.input = opt.input;
    if (opt.session != "M1" && opt.session != "M2" && opt.session != "both") {
        throw gait::ConfigError("--session must be M1, M2, or both, got \"" + opt.session +
                                "\"");
    }
    m.session = opt.session;
    m.raw_scores = opt.raw_scores;
    if (!opt.config_path.empty()) m.config = gait::load_config_file(opt.config_path);
    if (opt.seed >= 0) m.config.seed = static_cast<std::uint64_t>(opt.seed);
    m.seeds = parse_seed_list(opt.seeds);
    if (subcommand == "synth") {
        m.scenario = opt.scenario;
        m.synth_n = opt.synth_n;
        m.spec_path = opt.spec_path;
    }
    return m;
}

void add_common_options(CLI::App* cmd, CliOptions& opt, bool with_input) {
    if (with_input) cmd->add_option("--input", opt.input, "input dataset CSV");
    cmd->add_option("--out", opt.out, "output directory (default: $GAITLEVELS_OUT)");
    cmd->add_option("--config", opt.config_path, "flat key=value config file");
    cmd->add_option("--seed", opt.seed, "override the run seed");
    cmd->add_option("--session", opt.session, "restrict to one session: M1 | M2 | both");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-level gait analysis: composite scores, trajectory "
                 "dispersion, latent embedding, and dissociation detection"};
    app.require_subcommand(1);

    CliOptions opt;

    auto* ingest = app.add_subcommand("ingest", "validate a dataset and keep linear phases");
    add_common_options(ingest, opt, true);

    auto* score = app.add_subcommand("score", "composite score tables per condition cell");
    add_common_options(score, opt, true);
    score->add_flag("--raw-scores", opt.raw_scores,
                    "score raw feature values instead of preprocessed ones");

    auto* dynamics = app.add_subcommand("dynamics", "trajectory dispersion per condition cell");
    add_common_options(dynamics, opt, true);

    auto* embed = app.add_subcommand("embed", "latent embedding CSV and scatter plot");
    add_common_options(embed, opt, true);

    auto* dissociate =
        app.add_subcommand("dissociate", "flag score-similar, latent-separated condition pairs");
    add_common_options(dissociate, opt, true);

    auto* stability = app.add_subcommand("stability", "embedding agreement across seeds");
    add_common_options(stability, opt, true);
    stability->add_option("--seeds", opt.seeds, "comma-separated embedding seeds");

    auto* synth = app.add_subcommand("synth", "generate a calibrated synthetic dataset");
    add_common_options(synth, opt, false);
    synth->add_option("--scenario", opt.scenario,
                      "built-in generator: reference | dissociation");
    synth->add_option("--n", opt.synth_n, "rows per (condition, session) cell");
    synth->add_option("--spec", opt.spec_path, "generator spec file (overrides --scenario)");

    auto* report = app.add_subcommand("report", "run every stage and aggregate the results");
    add_common_options(report, opt, true);
    report->add_flag("--raw-scores", opt.raw_scores,
                     "score raw feature values instead of preprocessed ones");
    report->add_option("--seeds", opt.seeds,
                       "comma-separated seeds; enables the stability section");

    auto* rerun = app.add_subcommand("rerun", "repeat a run from its manifest");
    rerun->add_option("--manifest", opt.manifest_path, "run_manifest.txt of the original run")
        ->required();
    rerun->add_option("--out", opt.out, "output directory (default: $GAITLEVELS_OUT)");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        const gait::RunManifest manifest = name == "rerun"
                                               ? gait::load_manifest(opt.manifest_path)
                                               : build_manifest(opt, name);
        const std::string out_dir = resolve_out_dir(opt);
        const auto written = gait::run_subcommand(manifest, out_dir);
        for (const auto& path : written) std::cout << "wrote " << path << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
