#include "qti/zeromodes.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qti/linalg.hpp"

namespace qti {

ZeroModeData analytic_modes(const FieldProfile& profile, const Interfaces& m) {
  const int n = profile.half_length();
  if (m.m_plus < -n || m.m_plus > n || m.m_minus != -m.m_plus)
    throw std::invalid_argument("analytic_modes: interfaces outside chain");
  for (const double f : profile.values)
    if (f <= 0.0) throw std::invalid_argument("analytic_modes: field must stay positive");

  ZeroModeData zm;
  zm.half_length = n;
  zm.m_minus = m.m_minus;
  zm.m_plus = m.m_plus;
  zm.clamped = m.clamped;

  const int count = m.m_plus + n + 1;
  // Partial products of f starting one site outside the chain; that first
  // factor is common to every coefficient and cancels under normalization,
  // so only the clean extension g (N+1)^2 + delta is ever needed for it.
  const double f_outside = profile.params.g * static_cast<double>(n + 1) * (n + 1)
                           + profile.params.delta;
  std::vector<double> logs(count);
  double run = std::log(f_outside);
  logs[0] = run;
  for (int i = 1; i < count; ++i) {
    run += std::log(profile.values[i - 1]);
    logs[i] = run;
  }

  // log-sum-exp of the squared partial products
  double peak = logs[0];
  for (const double s : logs) peak = std::max(peak, s);
  double acc = 0.0;
  for (const double s : logs) acc += std::exp(2.0 * (s - peak));
  zm.log_omega = 2.0 * peak + std::log(acc);
  zm.omega = std::exp(zm.log_omega);

  zm.alpha.resize(count);
  zm.log_alpha.resize(count);
  for (int i = 0; i < count; ++i) {
    zm.log_alpha[i] = logs[i] - 0.5 * zm.log_omega;
    zm.alpha[i] = std::exp(zm.log_alpha[i]);
  }

  zm.log_delta = 0.0;
  for (int j = m.m_minus; j <= m.m_plus; ++j) zm.log_delta += std::log(profile.at(j));
  zm.delta_prod = std::exp(zm.log_delta);
  const double log_lambda0 = zm.log_delta + 2.0 * zm.log_alpha[m.m_minus + n] - std::log(2.0);
  zm.lambda0 = std::exp(log_lambda0);
  zm.epsilon0_analytic = 4.0 * zm.lambda0;
  return zm;
}

ModeVectors make_mode_vectors(const ZeroModeData& data) {
  const int n = data.half_length;
  const int cells = 2 * n + 1;
  ModeVectors v;
  v.dim = 2 * cells;
  v.phi_a.assign(v.dim, 0.0);
  v.phi_b.assign(v.dim, 0.0);
  for (int j = -n; j <= data.m_plus; ++j) {
    v.phi_a[2 * (j + n)] = data.alpha_at(j);          // A site of cell j
    v.phi_b[2 * (-j + n) + 1] = data.alpha_at(j);     // B site of cell -j
  }
  v.phi_plus.resize(v.dim);
  v.phi_minus.resize(v.dim);
  const double inv = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < v.dim; ++i) {
    v.phi_plus[i] = inv * (v.phi_a[i] + v.phi_b[i]);
    v.phi_minus[i] = inv * (v.phi_a[i] - v.phi_b[i]);
  }
  return v;
}

ResidualReport residual_check(const MajoranaMatrix& m, const ModeVectors& v,
                              const ZeroModeData& data) {
  if (m.dim != v.dim) throw std::invalid_argument("residual_check: dimension mismatch");
  ResidualReport rep;
  std::vector<double> work(m.dim);
  tridiag_matvec(m.diagonal, m.subdiagonal, v.phi_a.data(), work.data());
  rep.norm_a = nrm2(work.data(), m.dim);
  tridiag_matvec(m.diagonal, m.subdiagonal, v.phi_b.data(), work.data());
  rep.norm_b = nrm2(work.data(), m.dim);
  rep.expected = std::exp(data.log_delta + data.log_alpha[data.m_minus + data.half_length]
                          - std::log(2.0));
  // The matvec itself carries rounding noise ~ eps * |h|, which dominates
  // whenever the exact residual is smaller than that; the relative contract
  // applies above the floor.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, m.radius_bound()) * std::sqrt(static_cast<double>(m.dim));
  rep.tolerance = std::max(1e-10 * rep.expected, floor);
  rep.verified = std::abs(rep.norm_a - rep.expected) <= rep.tolerance &&
                 std::abs(rep.norm_b - rep.expected) <= rep.tolerance;
  return rep;
}

GaussianFit gaussian_fit(const ZeroModeData& data, const ChainParams& params) {
  if (params.g <= 0.0) throw std::invalid_argument("gaussian_fit needs g > 0");
  GaussianFit fit;
  const int n = data.half_length;
  const double curv = std::sqrt((params.coupling - params.delta) * params.g);
  const int halfwin = static_cast<int>(std::ceil(2.0 / std::sqrt(curv)));
  int lo = data.m_minus - halfwin;
  int hi = data.m_minus + halfwin;
  if (lo < -n || hi > data.m_plus) fit.edge_truncated = true;
  lo = std::max(lo, -n);
  hi = std::min(hi, data.m_plus);
  fit.window_lo = lo;
  fit.window_hi = hi;
  if (hi - lo < 2) throw std::invalid_argument("gaussian_fit: window too small");

  // least-squares quadratic y = a j^2 + b j + c on log alpha
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, t0 = 0, t1 = 0, t2 = 0;
  for (int j = lo; j <= hi; ++j) {
    const double x = j;
    const double y = data.log_alpha[j + n];
    s0 += 1;
    s1 += x;
    s2 += x * x;
    s3 += x * x * x;
    s4 += x * x * x * x;
    t0 += y;
    t1 += x * y;
    t2 += x * x * y;
  }
  // solve the 3x3 normal equations by Cramer's rule
  const double det = s4 * (s2 * s0 - s1 * s1) - s3 * (s3 * s0 - s1 * s2) +
                     s2 * (s3 * s1 - s2 * s2);
  if (std::abs(det) < 1e-30) throw std::runtime_error("gaussian_fit: singular normal equations");
  const double a = (t2 * (s2 * s0 - s1 * s1) - s3 * (t1 * s0 - t0 * s1) +
                    s2 * (t1 * s1 - t0 * s2)) / det;
  const double b = (s4 * (t1 * s0 - t0 * s1) - t2 * (s3 * s0 - s1 * s2) +
                    s2 * (s3 * t0 - s2 * t1)) / det;
  const double c = (t0 - a * s2 - b * s1) / s0;

  fit.curvature = -a;
  fit.center = (a != 0.0) ? -b / (2.0 * a) : 0.0;

  // pointwise deviation from the fitted Gaussian, in alpha units
  for (int j = lo; j <= hi; ++j) {
    const double pred = std::exp(a * j * j + b * j + c);
    fit.max_pointwise_error =
        std::max(fit.max_pointwise_error, std::abs(pred - data.alpha[j + n]));
  }
  return fit;
}

double mode_overlap(const ModeVectors& v, const SpectralData& s) {
  const int n = s.dim;
  if (v.dim != n || !s.has_vectors())
    throw std::invalid_argument("mode_overlap: need eigenvectors of matching dimension");
  const int half = n / 2;
  const auto u1 = s.eigenvector(half - 1);
  const auto u2 = s.eigenvector(half);
  auto proj = [&](const std::vector<double>& phi) {
    const double p1 = dot(phi.data(), u1.data(), n);
    const double p2 = dot(phi.data(), u2.data(), n);
    return std::sqrt(p1 * p1 + p2 * p2);
  };
  return std::min(proj(v.phi_plus), proj(v.phi_minus));
}

std::vector<SplitPoint> splitting_sweep(const ChainParams& base, const std::vector<double>& gs) {
  std::vector<SplitPoint> out(gs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < gs.size(); ++i) {
    ChainParams p = base;
    p.g = gs[i];
    const auto profile = build_profile(p);
    const auto m = interfaces_or_edges(p);
    const auto zm = analytic_modes(profile, m);
    const auto spec = diagonalize(build_h_m(profile, p.coupling), false);
    out[i] = {gs[i], zm.epsilon0_analytic, spec.epsilons.front()};
  }
  return out;
}

}  // namespace qti
