// Timing comparison between the OpenMP kernels and the serial reference
// implementations, on identical inputs, with agreement checks. Build target
// qti_bench; not part of the test suite.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qti/eigen_sym.hpp"
#include "qti/linalg.hpp"
#include "qti/majorana.hpp"
#include "qti/model.hpp"
#include "qti/observables.hpp"
#include "qti/quench.hpp"
#include "qti/reference.hpp"
#include "qti/zeromodes.hpp"

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::vector<double> random_symmetric(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = static_cast<double>(eng() >> 11) * 0x1.0p-53 - 0.5;
      a[static_cast<std::size_t>(i) * n + j] = a[static_cast<std::size_t>(j) * n + i] = v;
    }
  return a;
}

void bench_eigensolver() {
  std::printf("dense symmetric eigensolver: Householder+QL (OpenMP) vs Jacobi (serial)\n");
  for (const int n : {128, 256, 512}) {
    const auto a = random_symmetric(n, 7u + n);

    double t0 = now_seconds();
    std::vector<double> vals, vecs;
    qti::dense_sym_eigensystem(a, n, vals, vecs);
    const double t_ql = now_seconds() - t0;

    t0 = now_seconds();
    std::vector<double> jvals, jvecs;
    qti::reference::jacobi_eigensystem(a, n, jvals, jvecs);
    const double t_jac = now_seconds() - t0;

    double dev = 0.0;
    for (int i = 0; i < n; ++i) dev = std::max(dev, std::abs(vals[i] - jvals[i]));
    std::printf("  n=%4d   ql: %8.3f ms   jacobi: %8.3f ms   speedup %5.1fx   max|dl|=%.2e\n", n,
                1e3 * t_ql, 1e3 * t_jac, t_jac / t_ql, dev);
  }
}

void bench_fidelity() {
  std::printf("quench fidelity series: factored kernel (OpenMP) vs dense complex (serial)\n");
  qti::ChainParams params{2, 0.1, 0.5, 1.0};
  const auto profile = qti::build_profile(params);
  const auto zm = qti::analytic_modes(profile, qti::interfaces_or_edges(params));
  std::vector<double> times;
  for (int i = 0; i < 16; ++i) times.push_back(2.0 * i);
  const auto setup = qti::make_quench_setup(profile, zm, 0.8, 1.0, times);

  double t0 = now_seconds();
  const auto fast = qti::evolve_and_fidelity(setup);
  const double t_fast = now_seconds() - t0;

  t0 = now_seconds();
  const auto slow = qti::reference::fidelity_series_dense(
      setup.h_pre.mat, setup.h_pos.mat, static_cast<int>(setup.h_pre.dim), setup.beta, times);
  const double t_slow = now_seconds() - t0;

  double dev = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i)
    dev = std::max(dev, std::abs(fast.fidelity[i] - slow[i]));
  std::printf("  dim=%zu x %zu points   kernel: %8.3f ms   reference: %8.3f ms   max|dL|=%.2e\n",
              setup.h_pre.dim, times.size(), 1e3 * t_fast, 1e3 * t_slow, dev);
}

void bench_magnetization() {
  std::printf("magnetization sweep (per-site rediagonalization)\n");
  qti::ChainParams params{60, 3.0 / (60.0 * 60.0), 0.3, 1.0};
  const auto profile = qti::build_profile(params);
#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
  omp_set_num_threads(1);
  double t0 = now_seconds();
  auto serial = qti::magnetization(profile);
  const double t_serial = now_seconds() - t0;
  omp_set_num_threads(max_threads);
  t0 = now_seconds();
  auto parallel = qti::magnetization(profile);
  const double t_par = now_seconds() - t0;
  double dev = 0.0;
  for (std::size_t i = 0; i < serial.sigma_z.size(); ++i)
    dev = std::max(dev, std::abs(serial.sigma_z[i] - parallel.sigma_z[i]));
  std::printf("  N=60   1 thread: %8.3f ms   %d threads: %8.3f ms   speedup %4.1fx   max dev=%.2e\n",
              1e3 * t_serial, max_threads, 1e3 * t_par, t_serial / t_par, dev);
#else
  const double t0 = now_seconds();
  auto serial = qti::magnetization(profile);
  std::printf("  N=60   %8.3f ms (built without OpenMP)\n", 1e3 * (now_seconds() - t0));
#endif
}

}  // namespace

int main() {
  bench_eigensolver();
  bench_fidelity();
  bench_magnetization();
  return 0;
}
