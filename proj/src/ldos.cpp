#include "qti/ldos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qti/linalg.hpp"

namespace qti {

namespace {

constexpr double kBreakdownTol = 1e-14;

// Pad factor: a Lorentzian of half-width eta keeps ~1% of its mass beyond
// 64 eta, so the grid extends that far past the band edges to make the
// per-cell sum rule meaningful after broadening.
constexpr double kPadFactor = 64.0;

}  // namespace

std::vector<double> ldos_energy_grid(double lo, double hi, double pad, int bins) {
  if (bins < 2) throw std::invalid_argument("ldos grid needs bins >= 2");
  std::vector<double> e(bins);
  const double a = lo - pad;
  const double width = (hi + pad) - a;
  for (int i = 0; i < bins; ++i) e[i] = a + width * (i + 0.5) / bins;
  return e;
}

LdosGrid ldos_histogram(const SpectralData& s, int bins, double eta) {
  if (bins < 2) throw std::invalid_argument("ldos_histogram needs bins >= 2");
  if (!s.has_vectors()) throw std::invalid_argument("ldos_histogram needs eigenvectors");
  LdosGrid g;
  g.cells = s.dim / 2;
  g.bins = bins;
  g.bandwidth = s.lambdas.back() - s.lambdas.front();
  // cells = 2N+1, so the normalization divides by 2N = cells - 1
  g.norm_lambda = g.bandwidth / static_cast<double>(g.cells - 1);
  const double pad = eta > 0.0 ? kPadFactor * eta : 0.0;
  g.energies = ldos_energy_grid(s.lambdas.front(), s.lambdas.back(), pad, bins);
  const double binw = g.bin_width();
  const double grid_lo = g.energies.front() - 0.5 * binw;

  g.values.assign(static_cast<std::size_t>(g.cells) * bins, 0.0);
  if (eta <= 0.0) {
    // raw binned point measure: the weight of each eigenvector on each cell
    // lands in the bin holding its eigenvalue
#pragma omp parallel for schedule(static)
    for (int cell = 0; cell < g.cells; ++cell) {
      double* vc = g.values.data() + static_cast<std::size_t>(cell) * bins;
      for (int n = 0; n < s.dim; ++n) {
        int bin = static_cast<int>(std::floor((s.lambdas[n] - grid_lo) / binw));
        bin = std::clamp(bin, 0, bins - 1);
        const double wa = s.vectors[static_cast<std::size_t>(2 * cell) * s.dim + n];
        const double wb = s.vectors[static_cast<std::size_t>(2 * cell + 1) * s.dim + n];
        vc[bin] += g.norm_lambda * (wa * wa + wb * wb) / binw;
      }
    }
  } else {
    // Lorentzian broadening of the exact point measure, sampled at the bin
    // centers; broadening the binned masses instead would fold the in-bin
    // position error (bin width ~ eta here) into any oracle comparison
#pragma omp parallel for schedule(static)
    for (int cell = 0; cell < g.cells; ++cell) {
      double* vc = g.values.data() + static_cast<std::size_t>(cell) * bins;
      for (int n = 0; n < s.dim; ++n) {
        const double wa = s.vectors[static_cast<std::size_t>(2 * cell) * s.dim + n];
        const double wb = s.vectors[static_cast<std::size_t>(2 * cell + 1) * s.dim + n];
        const double w = g.norm_lambda * (wa * wa + wb * wb) * eta / std::numbers::pi;
        if (w == 0.0) continue;
        for (int i = 0; i < bins; ++i) {
          const double x = g.energies[i] - s.lambdas[n];
          vc[i] += w / (x * x + eta * eta);
        }
      }
    }
  }
  return g;
}

LanczosCoeffs lanczos_tridiag(const MajoranaMatrix& m, int seed_index, int max_depth) {
  if (seed_index < 0 || seed_index >= m.dim) throw std::invalid_argument("bad Lanczos seed");
  if (max_depth < 2) throw std::invalid_argument("Lanczos depth must be >= 2");
  const int depth_cap = std::min(max_depth, m.dim);

  LanczosCoeffs lc;
  lc.a.reserve(depth_cap);
  lc.b.assign(1, 0.0);

  std::vector<double> v(m.dim, 0.0), vprev(m.dim, 0.0), w(m.dim);
  v[seed_index] = 1.0;
  double beta = 0.0;
  for (int k = 0; k < depth_cap; ++k) {
    tridiag_matvec(m.diagonal, m.subdiagonal, v.data(), w.data());
    const double alpha = dot(v.data(), w.data(), m.dim);
    lc.a.push_back(alpha);
    for (int i = 0; i < m.dim; ++i) w[i] -= alpha * v[i] + beta * vprev[i];
    beta = nrm2(w.data(), m.dim);
    if (k + 1 >= depth_cap) break;
    if (beta < kBreakdownTol) {
      lc.breakdown = true;
      break;
    }
    lc.b.push_back(beta);
    for (int i = 0; i < m.dim; ++i) {
      vprev[i] = v[i];
      v[i] = w[i] / beta;
    }
  }
  lc.depth = static_cast<int>(lc.a.size());
  return lc;
}

std::complex<double> green_continued_fraction(const LanczosCoeffs& lc, std::complex<double> z,
                                              double a_inf, double b_inf) {
  std::complex<double> x{0.0, 0.0};
  if (!lc.breakdown && b_inf > kBreakdownTol) {
    const std::complex<double> w = z - a_inf;
    const std::complex<double> s = std::sqrt(w - 2.0 * b_inf) * std::sqrt(w + 2.0 * b_inf);
    x = (w - s) / (2.0 * b_inf * b_inf);
  }
  for (int k = lc.depth - 1; k >= 0; --k) {
    double bsq;
    if (k + 1 < lc.depth)
      bsq = lc.b[k + 1] * lc.b[k + 1];
    else
      bsq = lc.breakdown ? 0.0 : b_inf * b_inf;
    x = 1.0 / (z - lc.a[k] - bsq * x);
  }
  return x;
}

namespace {

void tail_average(const LanczosCoeffs& lc, double& a_inf, double& b_inf) {
  const int tail = std::max(1, lc.depth / 4);
  double sa = 0.0, sb = 0.0;
  int cb = 0;
  for (int k = lc.depth - tail; k < lc.depth; ++k) {
    sa += lc.a[k];
    if (k >= 1 && k < static_cast<int>(lc.b.size())) {
      sb += lc.b[k];
      ++cb;
    }
  }
  a_inf = sa / tail;
  b_inf = cb > 0 ? sb / cb : 0.0;
}

}  // namespace

std::vector<double> ldos_recursion_cell(const MajoranaMatrix& m, int cell, int depth, double eta,
                                        const std::vector<double>& energies, double norm_lambda) {
  if (eta <= 0.0) throw std::invalid_argument("recursion needs eta > 0");
  std::vector<double> out(energies.size(), 0.0);
  for (const int seed : {2 * cell, 2 * cell + 1}) {
    const auto lc = lanczos_tridiag(m, seed, depth);
    double a_inf = 0.0, b_inf = 0.0;
    tail_average(lc, a_inf, b_inf);
    for (std::size_t i = 0; i < energies.size(); ++i) {
      const auto gz = green_continued_fraction(lc, {energies[i], eta}, a_inf, b_inf);
      out[i] += std::max(0.0, -gz.imag() / std::numbers::pi);
    }
  }
  for (auto& v : out) v *= norm_lambda;
  return out;
}

LdosGrid ldos_recursion(const MajoranaMatrix& m, int depth, double eta, int bins) {
  const auto spec = diagonalize(m, false);
  LdosGrid g;
  g.cells = m.cells();
  g.bins = bins;
  g.bandwidth = spec.lambdas.back() - spec.lambdas.front();
  g.norm_lambda = g.bandwidth / static_cast<double>(g.cells - 1);
  g.energies = ldos_energy_grid(spec.lambdas.front(), spec.lambdas.back(), kPadFactor * eta, bins);
  g.values.assign(static_cast<std::size_t>(g.cells) * bins, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int cell = 0; cell < g.cells; ++cell) {
    const auto col = ldos_recursion_cell(m, cell, depth, eta, g.energies, g.norm_lambda);
    std::copy(col.begin(), col.end(), g.values.begin() + static_cast<std::size_t>(cell) * bins);
  }
  return g;
}

}  // namespace qti
