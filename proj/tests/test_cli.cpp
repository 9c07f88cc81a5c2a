#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "qti/cli.hpp"
#include "qti/io.hpp"

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string sub(const std::string& name) const { return (path / name).string(); }
};

int run_cli(std::vector<std::string> args) { return qti::cli::run(args); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("manifest round-trips the config") {
  qti::cli::RunConfig cfg;
  cfg.subcommand = "quench";
  cfg.params = {5, 0.1, 0.5, 1.0};
  cfg.disorder = {0.05, 12345};
  cfg.out_dir = "somewhere";
  cfg.quench_kappa = 1.0761;
  cfg.quench_tmax = 146.25;
  cfg.quench_steps = 128;
  cfg.sweep_n_list = {30, 60, 120};
  const auto text = qti::cli::to_manifest_json(cfg);
  const auto back = qti::cli::from_manifest_json(text);
  CHECK(back == cfg);
}

TEST_CASE("spectrum run produces the near-zero pair and identical reruns") {
  TempDir tmp("qti_cli_spectrum");
  const auto out1 = tmp.sub("a");
  const auto out2 = tmp.sub("b");
  CHECK(run_cli({"spectrum", "--N", "80", "--g", "5e-4", "--delta", "0.3", "--out", out1}) == 0);
  CHECK(run_cli({"spectrum", "--N", "80", "--g", "5e-4", "--delta", "0.3", "--out", out2}) == 0);

  const auto csv1 = qti::read_text(out1 + "/spectrum.csv");
  const auto csv2 = qti::read_text(out2 + "/spectrum.csv");
  CHECK(csv1 == csv2);
  CHECK(qti::csv_all_finite(out1 + "/spectrum.csv"));

  // two near-zero rows around the middle of the ascending spectrum
  std::istringstream in(csv1);
  std::string line;
  std::getline(in, line);
  std::vector<double> lambdas;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    lambdas.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
  }
  REQUIRE(lambdas.size() == 322);
  CHECK(std::abs(lambdas[160]) < 1e-8);
  CHECK(std::abs(lambdas[161]) < 1e-8);
}

TEST_CASE("rerun from a manifest reproduces bytes") {
  TempDir tmp("qti_cli_rerun");
  const auto out1 = tmp.sub("a");
  const auto out2 = tmp.sub("b");
  CHECK(run_cli({"zeromodes", "--N", "40", "--g", "2e-3", "--delta", "0.3", "--out", out1}) == 0);
  CHECK(run_cli({"rerun", out1 + "/manifest.json", "--out", out2}) == 0);
  CHECK(qti::read_text(out1 + "/zeromodes.csv") == qti::read_text(out2 + "/zeromodes.csv"));
  CHECK(qti::read_text(out1 + "/zeromodes.json") == qti::read_text(out2 + "/zeromodes.json"));
}

TEST_CASE("config file feeds defaults, flags override") {
  TempDir tmp("qti_cli_config");
  const auto cfgfile = tmp.sub("run.cfg");
  qti::write_text(cfgfile,
                  "# model\nN = 12\ng = 1e-3\ndelta = 0.3\nJ = 1.0\n"
                  "disorder.w = 0\ndisorder.seed = 0\n");
  const auto out1 = tmp.sub("a");
  const auto out2 = tmp.sub("b");
  CHECK(run_cli({"spectrum", "--config", cfgfile, "--out", out1}) == 0);
  CHECK(run_cli({"spectrum", "--N", "12", "--g", "1e-3", "--delta", "0.3", "--out", out2}) == 0);
  CHECK(qti::read_text(out1 + "/spectrum.csv") == qti::read_text(out2 + "/spectrum.csv"));

  const auto out3 = tmp.sub("c");
  const auto out4 = tmp.sub("d");
  CHECK(run_cli({"spectrum", "--config", cfgfile, "--N", "9", "--out", out3}) == 0);
  CHECK(run_cli({"spectrum", "--N", "9", "--g", "1e-3", "--delta", "0.3", "--out", out4}) == 0);
  CHECK(qti::read_text(out3 + "/spectrum.csv") == qti::read_text(out4 + "/spectrum.csv"));
}

TEST_CASE("usage errors exit with code 1") {
  TempDir tmp("qti_cli_usage");
  CHECK(run_cli({"zeromodes", "--N", "10", "--g", "0", "--delta", "0.3",
                 "--out", tmp.sub("x")}) == 1);
  CHECK(run_cli({"nonsense"}) == 1);
  CHECK(run_cli({"sweep", "figure4b", "--N", "5", "--out", tmp.sub("y")}) == 1);
}

TEST_CASE("splitting sweep emits the ordered table") {
  TempDir tmp("qti_cli_sweep");
  const auto out = tmp.sub("a");
  CHECK(run_cli({"sweep", "figure4a", "--N", "5", "--delta", "0.5", "--g-min", "0.05", "--g-max",
                 "0.35", "--points", "7", "--out", out}) == 0);
  CHECK(qti::csv_all_finite(out + "/splitting.csv"));
  std::istringstream in(qti::read_text(out + "/splitting.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "g,epsilon0_analytic,epsilon0_numeric");
  int rows = 0;
  double prev = -1.0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double numeric = std::stod(line.substr(c2 + 1));
    CHECK(numeric > prev);
    prev = numeric;
    ++rows;
  }
  CHECK(rows == 7);
}

TEST_CASE("disorder ensemble summary") {
  TempDir tmp("qti_cli_ens");
  const auto out = tmp.sub("a");
  CHECK(run_cli({"sweep", "disorder", "--N", "40", "--g", "2e-3", "--delta", "0.3",
                 "--disorder-w", "0.05", "--disorder-seed", "100", "--seeds", "5", "--out",
                 out}) == 0);
  CHECK(qti::csv_all_finite(out + "/ensemble.csv"));
  const auto summary = qti::read_text(out + "/ensemble.json");
  CHECK(summary.find("max_epsilon0") != std::string::npos);

  // w = 0 is rejected for the ensemble target
  CHECK(run_cli({"sweep", "disorder", "--N", "40", "--g", "2e-3", "--delta", "0.3", "--seeds",
                 "3", "--out", tmp.sub("b")}) == 1);
}

}  // TEST_SUITE
