#include "qti/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "qti/io.hpp"
#include "qti/ldos.hpp"
#include "qti/majorana.hpp"
#include "qti/observables.hpp"
#include "qti/quench.hpp"
#include "qti/zeromodes.hpp"

namespace qti::cli {

namespace {

using nlohmann::json;

json config_to_json(const RunConfig& c) {
  json j;
  j["subcommand"] = c.subcommand;
  j["version"] = kVersion;
  j["N"] = c.params.half_length;
  j["g"] = c.params.g;
  j["delta"] = c.params.delta;
  j["J"] = c.params.coupling;
  j["disorder.w"] = c.disorder.w;
  j["disorder.seed"] = c.disorder.seed;
  j["out"] = c.out_dir;
  j["threads"] = c.threads;
  j["dump_matrix"] = c.dump_matrix;
  j["ldos.method"] = c.ldos_method;
  j["ldos.bins"] = c.ldos_bins;
  j["ldos.depth"] = c.ldos_depth;
  j["ldos.eta"] = c.ldos_eta;
  j["quench.kappa"] = c.quench_kappa;
  j["quench.beta"] = c.quench_beta;
  j["quench.tmax"] = c.quench_tmax;
  j["quench.steps"] = c.quench_steps;
  j["sweep.target"] = c.sweep_target;
  j["sweep.g_min"] = c.sweep_g_min;
  j["sweep.g_max"] = c.sweep_g_max;
  j["sweep.points"] = c.sweep_points;
  j["sweep.n_list"] = c.sweep_n_list;
  j["sweep.g_n"] = c.sweep_g_n;
  j["sweep.seeds"] = c.sweep_seeds;
  return j;
}

}  // namespace

std::string to_manifest_json(const RunConfig& cfg) { return config_to_json(cfg).dump(2) + "\n"; }

RunConfig from_manifest_json(const std::string& text) {
  const json j = json::parse(text);
  RunConfig c;
  c.subcommand = j.at("subcommand").get<std::string>();
  c.params.half_length = j.at("N").get<int>();
  c.params.g = j.at("g").get<double>();
  c.params.delta = j.at("delta").get<double>();
  c.params.coupling = j.at("J").get<double>();
  c.disorder.w = j.at("disorder.w").get<double>();
  c.disorder.seed = j.at("disorder.seed").get<std::uint64_t>();
  c.out_dir = j.at("out").get<std::string>();
  c.threads = j.at("threads").get<int>();
  c.dump_matrix = j.at("dump_matrix").get<bool>();
  c.ldos_method = j.at("ldos.method").get<std::string>();
  c.ldos_bins = j.at("ldos.bins").get<int>();
  c.ldos_depth = j.at("ldos.depth").get<int>();
  c.ldos_eta = j.at("ldos.eta").get<double>();
  c.quench_kappa = j.at("quench.kappa").get<double>();
  c.quench_beta = j.at("quench.beta").get<double>();
  c.quench_tmax = j.at("quench.tmax").get<double>();
  c.quench_steps = j.at("quench.steps").get<int>();
  c.sweep_target = j.at("sweep.target").get<std::string>();
  c.sweep_g_min = j.at("sweep.g_min").get<double>();
  c.sweep_g_max = j.at("sweep.g_max").get<double>();
  c.sweep_points = j.at("sweep.points").get<int>();
  c.sweep_n_list = j.at("sweep.n_list").get<std::vector<int>>();
  c.sweep_g_n = j.at("sweep.g_n").get<double>();
  c.sweep_seeds = j.at("sweep.seeds").get<int>();
  return c;
}

namespace {

std::optional<DisorderSpec> disorder_of(const RunConfig& c) {
  if (c.disorder.w == 0.0) return std::nullopt;
  return c.disorder;
}

std::string path_in(const RunConfig& c, const std::string& name) {
  return (std::filesystem::path(c.out_dir) / name).string();
}

void write_manifest(const RunConfig& c) {
  std::filesystem::create_directories(c.out_dir);
  write_text(path_in(c, "manifest.json"), to_manifest_json(c));
}

void run_spectrum(const RunConfig& c) {
  const auto profile = build_profile(c.params, disorder_of(c));
  const auto m = build_h_m(profile, c.params.coupling);
  const auto s = diagonalize(m, true);
  std::vector<std::vector<double>> rows;
  rows.reserve(s.dim);
  for (int n = 0; n < s.dim; ++n)
    rows.push_back({static_cast<double>(n), s.lambdas[n], 4.0 * std::abs(s.lambdas[n])});
  write_csv(path_in(c, "spectrum.csv"), {"n", "lambda", "epsilon"}, rows);

  if (c.dump_matrix) {
    std::ostringstream dump;
    dump << "# banded symmetric tridiagonal, rows: k diagonal subdiagonal\n";
    for (int k = 0; k < m.dim; ++k)
      dump << k << ' ' << format_double(m.diagonal[k]) << ' '
           << format_double(k + 1 < m.dim ? m.subdiagonal[k] : 0.0) << '\n';
    write_text(path_in(c, "matrix.txt"), dump.str());
  }

  json summary;
  summary["ground_energy"] = s.ground_energy;
  summary["epsilon0"] = s.epsilons.front();
  summary["degenerate_zero_pair"] = s.degenerate_zero_pair;
  summary["spectral_radius"] = s.spectral_radius();
  write_text(path_in(c, "spectrum.json"), summary.dump(2) + "\n");
}

void run_zeromodes(const RunConfig& c) {
  const auto profile = build_profile(c.params, disorder_of(c));
  const auto ifc = interface_sites(c.params);  // throws for g = 0
  const auto zm = analytic_modes(profile, ifc);
  const auto modes = make_mode_vectors(zm);
  const auto hm = build_h_m(profile, c.params.coupling);
  const auto spec = diagonalize(hm, true);
  const auto fit = gaussian_fit(zm, c.params);
  const double overlap = mode_overlap(modes, spec);

  const int n = c.params.half_length;
  const int half = spec.dim / 2;
  const auto u1 = spec.eigenvector(half - 1);
  const auto u2 = spec.eigenvector(half);
  const double curv = std::sqrt((c.params.coupling - c.params.delta) * c.params.g);
  std::vector<std::vector<double>> rows;
  for (int j = -n; j <= n; ++j) {
    const double alpha = j <= zm.m_plus ? zm.alpha_at(j) : 0.0;
    const double gauss = zm.alpha_peak() * std::exp(-curv * (j - zm.m_minus) * (j - zm.m_minus));
    const double wa = std::hypot(u1[2 * (j + n)], u2[2 * (j + n)]);
    rows.push_back({static_cast<double>(j), alpha, gauss, wa});
  }
  write_csv(path_in(c, "zeromodes.csv"),
            {"j", "alpha_j", "gaussian_prediction_j", "numeric_mode_j"}, rows);

  json summary;
  summary["omega"] = zm.omega;
  summary["log_omega"] = zm.log_omega;
  summary["delta_prod"] = zm.delta_prod;
  summary["log_delta"] = zm.log_delta;
  summary["lambda0"] = zm.lambda0;
  summary["epsilon0_analytic"] = zm.epsilon0_analytic;
  summary["epsilon0_numeric"] = spec.epsilons.front();
  summary["m_minus"] = zm.m_minus;
  summary["m_plus"] = zm.m_plus;
  summary["clamped"] = zm.clamped;
  summary["overlap"] = overlap;
  summary["gaussian_center"] = fit.center;
  summary["gaussian_curvature"] = fit.curvature;
  write_text(path_in(c, "zeromodes.json"), summary.dump(2) + "\n");
}

void run_observables(const RunConfig& c) {
  const auto profile = build_profile(c.params, disorder_of(c));
  const auto mag = magnetization(profile);
  const auto chi = susceptibility(profile);
  for (const auto& w : chi.warnings) std::cerr << "warning: " << w << '\n';

  const int n = c.params.half_length;
  std::vector<std::vector<double>> rows;
  for (int k = 0; k < profile.length(); ++k)
    rows.push_back({static_cast<double>(k - n), mag.xi[k], profile.values[k], mag.sigma_z[k],
                    chi.chi_z[k]});
  write_csv(path_in(c, "observables.csv"), {"j", "xi_j", "f_j", "sigma_z_j", "chi_z_j"}, rows);
}

void run_ldos(const RunConfig& c) {
  const auto profile = build_profile(c.params, disorder_of(c));
  const auto m = build_h_m(profile, c.params.coupling);
  LdosGrid grid;
  if (c.ldos_method == "histogram") {
    grid = ldos_histogram(diagonalize(m, true), c.ldos_bins, c.ldos_eta);
  } else if (c.ldos_method == "recursion") {
    grid = ldos_recursion(m, c.ldos_depth, c.ldos_eta, c.ldos_bins);
  } else {
    throw std::invalid_argument("ldos method must be histogram or recursion");
  }
  const int n = c.params.half_length;
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(grid.cells) * grid.bins);
  for (int cell = 0; cell < grid.cells; ++cell)
    for (int b = 0; b < grid.bins; ++b)
      rows.push_back({static_cast<double>(cell - n), grid.energies[b], grid.at(cell, b)});
  write_csv(path_in(c, "ldos.csv"), {"j", "epsilon", "D"}, rows);
}

void run_quench(const RunConfig& c) {
  const auto profile = build_profile(c.params, disorder_of(c));
  const auto zm = analytic_modes(profile, interfaces_or_edges(c.params));
  const auto spec = diagonalize(build_h_m(profile, c.params.coupling), false);
  const double eps0 = spec.epsilons.front();

  std::vector<double> times(c.quench_steps);
  for (int i = 0; i < c.quench_steps; ++i)
    times[i] = c.quench_tmax * i / (c.quench_steps - 1);

  const auto setup = make_quench_setup(profile, zm, c.quench_kappa, c.quench_beta, times);
  auto result = evolve_and_fidelity(setup);
  result.epsilon0_ref = eps0;

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < times.size(); ++i) rows.push_back({times[i], result.fidelity[i]});
  write_csv(path_in(c, "quench.csv"), {"t", "L"}, rows);

  json summary;
  summary["kappa"] = c.quench_kappa;
  summary["beta"] = c.quench_beta;
  summary["epsilon0_numeric"] = eps0;
  summary["epsilon0_analytic"] = zm.epsilon0_analytic;
  summary["period_predicted"] = eps0 > 0.0 ? 2.0 * std::numbers::pi / eps0 : 0.0;
  try {
    const auto est = extract_period(times, result.fidelity);
    summary["period_extracted"] = est.period;
    summary["first_revival"] = est.first_revival;
  } catch (const std::runtime_error&) {
    summary["period_extracted"] = 0.0;
    summary["first_revival"] = 0.0;
  }
  write_text(path_in(c, "quench.json"), summary.dump(2) + "\n");
}

void run_sweep(const RunConfig& c) {
  if (c.sweep_target == "figure4a") {
    std::vector<double> gs(c.sweep_points);
    for (int i = 0; i < c.sweep_points; ++i)
      gs[i] = c.sweep_g_min +
              (c.sweep_g_max - c.sweep_g_min) * i / std::max(1, c.sweep_points - 1);
    const auto table = splitting_sweep(c.params, gs);
    std::vector<std::vector<double>> rows;
    for (const auto& p : table)
      rows.push_back({p.g, p.epsilon0_analytic, p.epsilon0_numeric});
    write_csv(path_in(c, "splitting.csv"), {"g", "epsilon0_analytic", "epsilon0_numeric"}, rows);
    return;
  }

  if (c.sweep_target == "crossings") {
    if (c.sweep_n_list.size() < 2)
      throw std::invalid_argument("sweep crossings needs --N-list with >= 2 sizes");
    std::vector<ObservableSeries> series;
    for (const int n : c.sweep_n_list) {
      ChainParams p = c.params;
      p.half_length = n;
      p.g = c.sweep_g_n / (static_cast<double>(n) * n);
      const auto profile = build_profile(p);
      auto s = magnetization(profile);
      std::vector<std::vector<double>> rows;
      for (int k = 0; k < profile.length(); ++k)
        rows.push_back({s.xi[k], s.sigma_z[k]});
      write_csv(path_in(c, "sigma_N" + std::to_string(n) + ".csv"), {"xi", "sigma_z"}, rows);
      series.push_back(std::move(s));
    }
    const auto rep = scaling_collapse(series);
    json out;
    out["n_values"] = rep.n_values;
    out["crossings_plus"] = rep.crossings_plus;
    out["crossings_minus"] = rep.crossings_minus;
    out["mean_plus"] = rep.mean_plus;
    out["mean_minus"] = rep.mean_minus;
    out["spread_plus"] = rep.spread_plus;
    out["spread_minus"] = rep.spread_minus;
    write_text(path_in(c, "crossing_report.json"), out.dump(2) + "\n");
    return;
  }

  if (c.sweep_target == "disorder") {
    if (c.disorder.w <= 0.0) throw std::invalid_argument("sweep disorder needs --disorder-w > 0");
    const int n = c.params.half_length;
    const int count = c.sweep_seeds;
    std::vector<std::vector<double>> rows(count);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < count; ++k) {
      DisorderSpec d{c.disorder.w, c.disorder.seed + static_cast<std::uint64_t>(k)};
      const auto profile = build_profile(c.params, d);
      const auto spec = diagonalize(build_h_m(profile, c.params.coupling), true);
      const int half = spec.dim / 2;
      const auto u1 = spec.eigenvector(half - 1);
      const auto u2 = spec.eigenvector(half);
      int peak_lo = 0, peak_hi = 0;
      double best_lo = -1.0, best_hi = -1.0;
      for (int j = -n; j <= n; ++j) {
        const int ia = 2 * (j + n), ib = ia + 1;
        const double w =
            u1[ia] * u1[ia] + u1[ib] * u1[ib] + u2[ia] * u2[ia] + u2[ib] * u2[ib];
        if (j < 0 && w > best_lo) {
          best_lo = w;
          peak_lo = j;
        }
        if (j > 0 && w > best_hi) {
          best_hi = w;
          peak_hi = j;
        }
      }
      rows[k] = {static_cast<double>(d.seed), spec.epsilons.front(),
                 static_cast<double>(peak_lo), static_cast<double>(peak_hi)};
    }
    write_csv(path_in(c, "ensemble.csv"), {"seed", "epsilon0", "center_minus", "center_plus"},
              rows);

    const auto clean_ifc = interface_sites(c.params);
    double max_eps = 0.0, max_drift = 0.0;
    for (const auto& r : rows) {
      max_eps = std::max(max_eps, r[1]);
      max_drift = std::max({max_drift, std::abs(r[2] - clean_ifc.m_minus),
                            std::abs(r[3] - clean_ifc.m_plus)});
    }
    json out;
    out["seeds"] = count;
    out["w"] = c.disorder.w;
    out["max_epsilon0"] = max_eps;
    out["max_center_drift"] = max_drift;
    out["m_minus"] = clean_ifc.m_minus;
    out["m_plus"] = clean_ifc.m_plus;
    write_text(path_in(c, "ensemble.json"), out.dump(2) + "\n");
    return;
  }

  throw std::invalid_argument("unknown sweep target: " + c.sweep_target);
}

}  // namespace

void execute(const RunConfig& cfg) {
  cfg.params.validate();
  for (const auto& w : cfg.params.warnings()) std::cerr << "warning: " << w << '\n';
#ifdef _OPENMP
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
  write_manifest(cfg);
  if (cfg.subcommand == "spectrum") return run_spectrum(cfg);
  if (cfg.subcommand == "zeromodes") return run_zeromodes(cfg);
  if (cfg.subcommand == "observables") return run_observables(cfg);
  if (cfg.subcommand == "ldos") return run_ldos(cfg);
  if (cfg.subcommand == "quench") return run_quench(cfg);
  if (cfg.subcommand == "sweep") return run_sweep(cfg);
  throw std::invalid_argument("unknown subcommand: " + cfg.subcommand);
}

namespace {

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::istringstream in(read_text(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

struct ModelFlags {
  std::string config_file;
  CLI::Option* opt_n = nullptr;
  CLI::Option* opt_g = nullptr;
  CLI::Option* opt_delta = nullptr;
  CLI::Option* opt_j = nullptr;
  CLI::Option* opt_w = nullptr;
  CLI::Option* opt_seed = nullptr;
};

ModelFlags add_model_options(CLI::App* sub, RunConfig& cfg) {
  ModelFlags mf;
  sub->add_option("--config", mf.config_file, "key = value file: N, g, delta, J, disorder.w, disorder.seed");
  mf.opt_n = sub->add_option("--N", cfg.params.half_length, "chain half-length, L = 2N+1");
  mf.opt_g = sub->add_option("--g", cfg.params.g, "quadratic field strength");
  mf.opt_delta = sub->add_option("--delta", cfg.params.delta, "field baseline");
  mf.opt_j = sub->add_option("--J", cfg.params.coupling, "coupling strength");
  mf.opt_w = sub->add_option("--disorder-w", cfg.disorder.w, "multiplicative disorder amplitude");
  mf.opt_seed = sub->add_option("--disorder-seed", cfg.disorder.seed, "disorder seed");
  sub->add_option("--out", cfg.out_dir, "output directory");
  sub->add_option("--threads", cfg.threads, "worker threads (0 = runtime default)");
  return mf;
}

// precedence: built-in defaults < config file < explicit flags
void apply_config_file(const ModelFlags& mf, RunConfig& cfg) {
  if (mf.config_file.empty()) return;
  const auto kv = parse_config_file(mf.config_file);
  const auto set_if = [&](const char* key, CLI::Option* opt, auto& target) {
    const auto it = kv.find(key);
    if (it == kv.end() || opt->count() > 0) return;
    std::istringstream ss(it->second);
    ss >> target;
    if (ss.fail()) throw std::invalid_argument(std::string("bad config value for ") + key);
  };
  set_if("N", mf.opt_n, cfg.params.half_length);
  set_if("g", mf.opt_g, cfg.params.g);
  set_if("delta", mf.opt_delta, cfg.params.delta);
  set_if("J", mf.opt_j, cfg.params.coupling);
  set_if("disorder.w", mf.opt_w, cfg.disorder.w);
  set_if("disorder.seed", mf.opt_seed, cfg.disorder.seed);
}

// kappa = 10 eps0 and tmax = 2.5 periods unless given explicitly; both need
// the splitting, so resolution happens after the model flags settle.
void resolve_quench_defaults(RunConfig& cfg, bool kappa_given, bool tmax_given) {
  if (kappa_given && tmax_given) return;
  const auto profile = build_profile(cfg.params, cfg.disorder.w != 0.0
                                                     ? std::optional<DisorderSpec>(cfg.disorder)
                                                     : std::nullopt);
  const auto spec = diagonalize(build_h_m(profile, cfg.params.coupling), false);
  const auto zm = analytic_modes(profile, interfaces_or_edges(cfg.params));
  double eps = spec.epsilons.front();
  if (eps < 1e-12) eps = zm.epsilon0_analytic;
  if (eps < 1e-12)
    throw std::invalid_argument("splitting too small to set quench defaults; pass --kappa/--tmax");
  if (!kappa_given) cfg.quench_kappa = 10.0 * eps;
  if (!tmax_given) {
    const double ref = zm.epsilon0_analytic > 1e-12 ? zm.epsilon0_analytic : eps;
    cfg.quench_tmax = 2.5 * 2.0 * std::numbers::pi / ref;
  }
}

}  // namespace

int run(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Ising chain in a quadratic transverse field: spectra, localized modes,\n"
               "real-space observables, LDOS, and thermal-quench dynamics"};
  app.require_subcommand(1);

  auto* sp = app.add_subcommand("spectrum", "Majorana-lattice spectrum and ground energy");
  auto mf_sp = add_model_options(sp, cfg);
  sp->add_flag("--dump-matrix", cfg.dump_matrix, "also dump the banded matrix");

  auto* zm = app.add_subcommand("zeromodes", "localized-mode coefficients and splitting");
  auto mf_zm = add_model_options(zm, cfg);

  auto* ob = app.add_subcommand("observables", "per-site magnetization and susceptibility");
  auto mf_ob = add_model_options(ob, cfg);

  auto* ld = app.add_subcommand("ldos", "local density of states");
  auto mf_ld = add_model_options(ld, cfg);
  ld->add_option("--method", cfg.ldos_method, "histogram | recursion")
      ->check(CLI::IsMember({"histogram", "recursion"}));
  ld->add_option("--bins", cfg.ldos_bins, "energy bins");
  ld->add_option("--depth", cfg.ldos_depth, "recursion depth");
  ld->add_option("--eta", cfg.ldos_eta, "Lorentzian broadening");

  auto* qu = app.add_subcommand("quench", "thermal-state quench fidelity");
  auto mf_qu = add_model_options(qu, cfg);
  auto* opt_kappa = qu->add_option("--kappa", cfg.quench_kappa, "symmetry-breaking coupling (default 10 eps0)");
  qu->add_option("--beta", cfg.quench_beta, "inverse temperature");
  auto* opt_tmax = qu->add_option("--tmax", cfg.quench_tmax, "time-grid end (default 2.5 periods)");
  qu->add_option("--steps", cfg.quench_steps, "time-grid points");

  auto* sw = app.add_subcommand("sweep", "parameter sweeps and ensembles");
  auto mf_sw = add_model_options(sw, cfg);
  sw->add_option("target", cfg.sweep_target, "figure4a | crossings | disorder")->required();
  sw->add_option("--g-min", cfg.sweep_g_min, "sweep start");
  sw->add_option("--g-max", cfg.sweep_g_max, "sweep end");
  sw->add_option("--points", cfg.sweep_points, "sweep points");
  sw->add_option("--N-list", cfg.sweep_n_list, "chain sizes for crossings")->delimiter(',');
  sw->add_option("--gN", cfg.sweep_g_n, "fixed N^2 g for crossings");
  sw->add_option("--seeds", cfg.sweep_seeds, "ensemble size for disorder");

  auto* rr = app.add_subcommand("rerun", "rerun a recorded manifest");
  std::string manifest_path;
  rr->add_option("manifest", manifest_path, "path to manifest.json")->required();
  std::string rerun_out;
  auto* opt_rerun_out = rr->add_option("--out", rerun_out, "override output directory");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (rr->parsed()) {
      RunConfig c = from_manifest_json(read_text(manifest_path));
      if (opt_rerun_out->count() > 0) c.out_dir = rerun_out;
      execute(c);
      return 0;
    }
    if (sp->parsed()) {
      cfg.subcommand = "spectrum";
      apply_config_file(mf_sp, cfg);
    } else if (zm->parsed()) {
      cfg.subcommand = "zeromodes";
      apply_config_file(mf_zm, cfg);
    } else if (ob->parsed()) {
      cfg.subcommand = "observables";
      apply_config_file(mf_ob, cfg);
    } else if (ld->parsed()) {
      cfg.subcommand = "ldos";
      apply_config_file(mf_ld, cfg);
    } else if (qu->parsed()) {
      cfg.subcommand = "quench";
      apply_config_file(mf_qu, cfg);
      resolve_quench_defaults(cfg, opt_kappa->count() > 0, opt_tmax->count() > 0);
    } else if (sw->parsed()) {
      cfg.subcommand = "sweep";
      apply_config_file(mf_sw, cfg);
    }
    execute(cfg);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qti::cli
