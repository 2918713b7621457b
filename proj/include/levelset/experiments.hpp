#ifndef LEVELSET_EXPERIMENTS_HPP
#define LEVELSET_EXPERIMENTS_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "levelset/evolve.hpp"
#include "levelset/grid.hpp"
#include "levelset/model.hpp"

namespace levelset {

using nlohmann::json;

/// Registered initial data by name; throws ConfigError for unknown names.
std::function<double(const Vec2&)> make_initial_datum(const json& problem);

/// Parse the JSON blocks of a run configuration. Each reports schema
/// violations as ConfigError carrying the offending field path.
Grid parse_grid(const json& cfg);
H1Spec parse_h1(const json& cfg);
CorrectorSpec parse_corrector(const json& cfg, double default_eps0);
Schedule parse_schedule(const json& cfg);
CflPolicy parse_policy(const json& cfg);

/// Execute the experiment named in config["experiment"] and persist CSVs,
/// report.json and a plot script under out_dir. Returns the report.
json run_experiment(const json& config, const std::filesystem::path& out_dir);

/// Load a config file and run it; the entry point behind `levelset run`.
json run_config_file(const std::filesystem::path& config_path,
                     const std::filesystem::path& out_dir);

/// Print the convergence table of an artifact directory: one row per sweep
/// member with the observed order log2(e_k / e_{k+1}).
void report_artifacts(const std::filesystem::path& dir, std::ostream& os);

/// Sweep parallelism cap: LEVELSET_THREADS when set, hardware otherwise.
int max_threads();

}  // namespace levelset

#endif
