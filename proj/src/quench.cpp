#include "qti/quench.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qti/eigen_sym.hpp"
#include "qti/linalg.hpp"

namespace qti {

namespace {

int string_sign(std::uint64_t b, std::uint64_t below_mask) {
  return (std::popcount(b & below_mask) & 1) ? -1 : 1;
}

}  // namespace

ManyBodyOperator build_spin_hamiltonian(const FieldProfile& profile, int site_cap) {
  const int sites = profile.length();
  if (sites > site_cap) {
    std::ostringstream msg;
    const double gib = std::pow(2.0, 2.0 * sites) * 8.0 / (1024.0 * 1024.0 * 1024.0);
    msg << "chain of " << sites << " sites needs a dense " << (1u << sites) << "^2 matrix ("
        << gib << " GiB), over the cap of " << site_cap << " sites";
    throw std::invalid_argument(msg.str());
  }
  ManyBodyOperator h;
  h.sites = sites;
  h.dim = std::size_t{1} << sites;
  h.mat.assign(h.dim * h.dim, 0.0);
  const double coupling = profile.params.coupling;

  for (std::size_t b = 0; b < h.dim; ++b) {
    double diag = 0.0;
    for (int s = 0; s < sites; ++s)
      diag += profile.values[s] * ((b >> s) & 1u ? 1.0 : -1.0);
    h.at(b, b) = diag;
    for (int s = 0; s + 1 < sites; ++s) {
      const std::size_t flipped = b ^ (std::size_t{3} << s);  // sigma_x sigma_x on s, s+1
      h.at(flipped, b) += -coupling;
    }
  }
  return h;
}

std::vector<double> parity_diagonal(int sites) {
  const std::size_t dim = std::size_t{1} << sites;
  std::vector<double> p(dim);
  for (std::size_t b = 0; b < dim; ++b) p[b] = (std::popcount(b) & 1) ? -1.0 : 1.0;
  return p;
}

ManyBodyOperator build_d0(const ZeroModeData& zm) {
  const int n = zm.half_length;
  const int sites = 2 * n + 1;
  ManyBodyOperator d0;
  d0.sites = sites;
  d0.dim = std::size_t{1} << sites;
  d0.mat.assign(d0.dim * d0.dim, 0.0);

  for (int j = -n; j <= zm.m_plus; ++j) {
    const double coeff = 0.5 * zm.alpha_at(j);
    const int s = j + n;   // site of c_j^dag + c_j
    const int t = -j + n;  // site of -c_{-j}^dag + c_{-j}
    const std::uint64_t mask_s = (std::uint64_t{1} << s) - 1;
    const std::uint64_t mask_t = (std::uint64_t{1} << t) - 1;
    for (std::size_t b = 0; b < d0.dim; ++b) {
      const double sgn_s = string_sign(b, mask_s);
      d0.at(b ^ (std::size_t{1} << s), b) += coeff * sgn_s;
      const double sgn_t = string_sign(b, mask_t);
      const double amp = (b >> t) & 1u ? sgn_t : -sgn_t;  // c fires on occupied, -c^dag on empty
      d0.at(b ^ (std::size_t{1} << t), b) += coeff * amp;
    }
  }
  return d0;
}

ManyBodyOperator build_d0_spin_strings(const ZeroModeData& zm) {
  const int n = zm.half_length;
  const int sites = 2 * n + 1;
  ManyBodyOperator d0;
  d0.sites = sites;
  d0.dim = std::size_t{1} << sites;
  d0.mat.assign(d0.dim * d0.dim, 0.0);

  // tau_j = [prod_{l<j} (-sigma_z_l)] sigma_x_j - i [prod_{l<-j} (-sigma_z_l)] sigma_y_{-j};
  // the -sigma_z string evaluates to (-1)^(set bits below), sigma_y carries
  // +-i that cancels the explicit -i into a real matrix.
  for (int j = -n; j <= zm.m_plus; ++j) {
    const double coeff = 0.5 * zm.alpha_at(j);
    const int s = j + n;
    const int t = -j + n;
    const std::uint64_t mask_s = (std::uint64_t{1} << s) - 1;
    const std::uint64_t mask_t = (std::uint64_t{1} << t) - 1;
    for (std::size_t b = 0; b < d0.dim; ++b) {
      const double string_x = string_sign(b, mask_s);
      d0.at(b ^ (std::size_t{1} << s), b) += coeff * string_x;  // string * sigma_x

      const double string_y = string_sign(b, mask_t);
      const std::complex<double> y_amp = (b >> t) & 1u ? std::complex<double>{0.0, 1.0}
                                                       : std::complex<double>{0.0, -1.0};
      const std::complex<double> amp = std::complex<double>{0.0, -1.0} * string_y * y_amp;
      d0.at(b ^ (std::size_t{1} << t), b) += coeff * amp.real();
    }
  }
  return d0;
}

MbEigen eig(const ManyBodyOperator& op, bool vectors) {
  MbEigen e;
  if (vectors) {
    dense_sym_eigensystem(op.mat, static_cast<int>(op.dim), e.values, e.vectors);
  } else {
    e.values = dense_sym_eigenvalues(op.mat, static_cast<int>(op.dim));
  }
  return e;
}

ThermalState thermal_state(const ManyBodyOperator& h, double beta) {
  if (beta < 0.0) throw std::invalid_argument("thermal_state needs beta >= 0");
  ThermalState ts;
  ts.beta = beta;
  ts.basis = eig(h, true);
  const double emin = ts.basis.values.front();
  ts.weights.resize(h.dim);
  double z = 0.0;
  for (std::size_t k = 0; k < h.dim; ++k) {
    ts.weights[k] = std::exp(-beta * (ts.basis.values[k] - emin));
    z += ts.weights[k];
  }
  for (auto& w : ts.weights) w /= z;
  return ts;
}

std::vector<double> thermal_density_matrix(const ThermalState& ts) {
  const std::size_t d = ts.weights.size();
  std::vector<double> scaled(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) scaled[i * d + k] = ts.basis.vectors[i * d + k] * ts.weights[k];
  std::vector<double> rho(d * d);
  matmul_abt(scaled.data(), d, d, ts.basis.vectors.data(), d, rho.data());
  return rho;
}

QuenchSetup make_quench_setup(const FieldProfile& profile, const ZeroModeData& zm, double kappa,
                              double beta, const std::vector<double>& times) {
  QuenchSetup qs;
  qs.kappa = kappa;
  qs.beta = beta;
  qs.times = times;
  qs.h_pos = build_spin_hamiltonian(profile);
  const auto d0 = build_d0(zm);
  qs.h_pre = qs.h_pos;
  for (std::size_t r = 0; r < d0.dim; ++r)
    for (std::size_t c = 0; c < d0.dim; ++c)
      qs.h_pre.at(r, c) += kappa * (d0.at(r, c) + d0.at(c, r));
  return qs;
}

namespace {

// One fidelity evaluation. With rho(t) = U rho0 U^dag and U diagonal in the
// post-quench eigenbasis, L(t) = |sqrt(rho0) U sqrt(rho0)|_tr^2; rotating by
// the rho0 eigenbasis leaves G = diag(sqrt f) X D(t) X^T diag(sqrt f) with
// X = V^T W orthogonal, so only the singular values of the r x r complex
// SYMMETRIC matrix G = Gre + i Gim are needed. For symmetric Gre, Gim the
// real symmetric matrix T = [[Gre, Gim], [Gim, -Gre]] squares to the
// embedding of G^dag G, so |eig(T)| gives each singular value twice at
// absolute accuracy ~ eps |G| - forming G^dag G itself would square away
// half the digits of the small singular values, which the trace sum needs.
struct FidelityWork {
  std::size_t r = 0, d = 0;
  std::vector<double> pc, ps, gre, gim, embed;

  void resize(std::size_t r_, std::size_t d_) {
    r = r_;
    d = d_;
    pc.resize(r * d);
    ps.resize(r * d);
    gre.resize(r * r);
    gim.resize(r * r);
    embed.resize(4 * r * r);
  }
};

double fidelity_at(const std::vector<double>& p, std::size_t r, std::size_t d,
                   const std::vector<double>& lam, double t, FidelityWork& w) {
  for (std::size_t i = 0; i < r; ++i) {
    const double* pi = p.data() + i * d;
    double* pci = w.pc.data() + i * d;
    double* psi = w.ps.data() + i * d;
    for (std::size_t m = 0; m < d; ++m) {
      pci[m] = pi[m] * std::cos(lam[m] * t);
      psi[m] = pi[m] * -std::sin(lam[m] * t);
    }
  }
  // both products come out exactly symmetric: entry (i,j) and (j,i) sum the
  // same terms in the same order
  matmul_abt(w.pc.data(), r, d, p.data(), r, w.gre.data());
  matmul_abt(w.ps.data(), r, d, p.data(), r, w.gim.data());

  const std::size_t m = 2 * r;
  w.embed.assign(m * m, 0.0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const double re = w.gre[i * r + j];
      const double im = w.gim[i * r + j];
      w.embed[i * m + j] = re;
      w.embed[i * m + (r + j)] = im;
      w.embed[(r + i) * m + j] = im;
      w.embed[(r + i) * m + (r + j)] = -re;
    }
  const auto mu = dense_sym_eigenvalues(w.embed, static_cast<int>(m));
  // spectrum must pair as +-s_k; a broken pair signals lost positivity of
  // sqrt(rho0) rho(t) sqrt(rho0) at the working precision
  double tr = 0.0;
  for (std::size_t k = 0; k < r; ++k) {
    if (std::abs(mu[k] + mu[m - 1 - k]) > 1e-10)
      throw std::runtime_error("fidelity: inner-product matrix lost positivity beyond 1e-10");
    tr += std::abs(mu[k]) + std::abs(mu[m - 1 - k]);
  }
  tr *= 0.5;  // each singular value appears twice in eig(T)
  return tr * tr;
}

}  // namespace

QuenchResult evolve_and_fidelity(const QuenchSetup& setup) {
  const std::size_t d = setup.h_pre.dim;
  const auto pre = eig(setup.h_pre, true);
  const auto pos = eig(setup.h_pos, true);

  const double emin = pre.values.front();
  std::vector<double> f(d);
  double z = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    f[k] = std::exp(-setup.beta * (pre.values[k] - emin));
    z += f[k];
  }
  for (auto& w : f) w /= z;

  std::vector<double> x(d * d);
  matmul_atb(pre.vectors.data(), d, d, pos.vectors.data(), d, x.data());

  // Populations below the cutoff cannot move the trace norm by more than
  // ~ d * sqrt(cutoff); 1e-30 keeps that under 1e-12.
  constexpr double cutoff = 1e-30;
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < d; ++k)
    if (f[k] > cutoff) keep.push_back(k);
  const std::size_t r = keep.size();

  std::vector<double> p(r * d);
  for (std::size_t i = 0; i < r; ++i) {
    const double s = std::sqrt(f[keep[i]]);
    const double* xrow = x.data() + keep[i] * d;
    double* prow = p.data() + i * d;
    for (std::size_t m = 0; m < d; ++m) prow[m] = s * xrow[m];
  }

  QuenchResult result;
  result.times = setup.times;
  result.fidelity.assign(setup.times.size(), 0.0);

  if (r <= 768) {
    // small problems: independent time points across threads
#pragma omp parallel
    {
      FidelityWork w;
      w.resize(r, d);
#pragma omp for schedule(dynamic)
      for (std::size_t i = 0; i < setup.times.size(); ++i)
        result.fidelity[i] = fidelity_at(p, r, d, pos.values, setup.times[i], w);
    }
  } else {
    // large problems: keep one workspace, parallelize inside the kernels
    FidelityWork w;
    w.resize(r, d);
    for (std::size_t i = 0; i < setup.times.size(); ++i)
      result.fidelity[i] = fidelity_at(p, r, d, pos.values, setup.times[i], w);
  }
  return result;
}

PeriodEstimate extract_period(const std::vector<double>& times,
                              const std::vector<double>& fidelity) {
  const std::size_t n = times.size();
  if (n < 16 || fidelity.size() != n) throw std::invalid_argument("extract_period: bad series");
  const double dt = times[1] - times[0];
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(times[i] - times[i - 1] - dt) > 1e-9 * dt)
      throw std::invalid_argument("extract_period: grid must be uniform");

  std::vector<double> y(n);
  double mean = 0.0, depth = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = 1.0 - fidelity[i];
    mean += y[i];
    depth = std::max(depth, std::abs(y[i]));
  }
  mean /= n;
  if (depth < 1e-9) throw std::runtime_error("no oscillation detected");

  // Hann window against leakage, zero-padding for a fine frequency grid; the
  // quadratic fit on log magnitude then pins the peak between grid points.
  const std::size_t pad = 8 * n;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double hann = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (n - 1));
    w[i] = (y[i] - mean) * hann;
  }
  const std::size_t kmax = pad / 2;
  std::vector<double> mag(kmax + 1, 0.0);
  std::size_t peak = 0;
#pragma omp parallel for schedule(static)
  for (std::size_t k = 1; k <= kmax; ++k) {
    double re = 0.0, im = 0.0;
    const double wk = 2.0 * std::numbers::pi * k / pad;
    for (std::size_t i = 0; i < n; ++i) {
      re += w[i] * std::cos(wk * i);
      im -= w[i] * std::sin(wk * i);
    }
    mag[k] = std::hypot(re, im);
  }
  for (std::size_t k = 1; k <= kmax; ++k)
    if (mag[k] > mag[peak]) peak = k;
  if (peak == 0 || mag[peak] <= 0.0) throw std::runtime_error("no oscillation detected");

  double shift = 0.0;
  if (peak > 1 && peak < kmax && mag[peak - 1] > 0.0 && mag[peak + 1] > 0.0) {
    const double lm = std::log(mag[peak - 1]);
    const double l0 = std::log(mag[peak]);
    const double lp = std::log(mag[peak + 1]);
    const double denom = lm - 2.0 * l0 + lp;
    if (denom < 0.0) shift = 0.5 * (lm - lp) / denom;
  }

  PeriodEstimate est;
  est.frequency = (static_cast<double>(peak) + shift) / (static_cast<double>(pad) * dt);
  est.period = 1.0 / est.frequency;

  // first revival: first local maximum of L after the initial dip
  std::size_t dip = 0;
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (fidelity[i] <= fidelity[i - 1] && fidelity[i] <= fidelity[i + 1]) {
      dip = i;
      break;
    }
  for (std::size_t i = dip + 1; i + 1 < n; ++i)
    if (fidelity[i] >= fidelity[i - 1] && fidelity[i] >= fidelity[i + 1]) {
      est.first_revival = times[i];
      break;
    }
  return est;
}

}  // namespace qti
