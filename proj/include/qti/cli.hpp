#ifndef QTI_CLI_HPP
#define QTI_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qti/model.hpp"

namespace qti::cli {

// Fully resolved run description. Every run writes <out>/manifest.json with
// exactly these fields, and a manifest parses back into an identical
// RunConfig, so fixed manifests rerun to bit-identical outputs.
struct RunConfig {
  std::string subcommand;
  ChainParams params;
  DisorderSpec disorder;  // w == 0 means clean
  std::string out_dir = "out";
  int threads = 0;  // 0 keeps the runtime default

  // spectrum
  bool dump_matrix = false;

  // ldos
  std::string ldos_method = "histogram";
  int ldos_bins = 500;
  int ldos_depth = 150;
  double ldos_eta = 0.02;

  // quench (kappa and tmax hold resolved numeric values)
  double quench_kappa = 0.0;
  double quench_beta = 1.0;
  double quench_tmax = 0.0;
  int quench_steps = 400;

  // sweep
  std::string sweep_target;
  double sweep_g_min = 0.05;
  double sweep_g_max = 0.35;
  int sweep_points = 30;
  std::vector<int> sweep_n_list;
  double sweep_g_n = 3.0;
  int sweep_seeds = 50;

  bool operator==(const RunConfig&) const = default;
};

std::string to_manifest_json(const RunConfig& cfg);
RunConfig from_manifest_json(const std::string& text);

// Executes a resolved config: writes the manifest and all dataset files into
// cfg.out_dir. Throws on numerical failure or invalid combinations.
void execute(const RunConfig& cfg);

// Full command-line entry: parse, resolve (config file < flags), execute.
// Returns 0 on success, 1 on usage errors, 2 on numerical/runtime failure.
int run(const std::vector<std::string>& args);

}  // namespace qti::cli

#endif
