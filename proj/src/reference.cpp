#include "qti/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qti::reference {

namespace {

// Real embedding of a complex Hermitian matrix: [[Re, -Im], [Im, Re]].
// Eigenvalues of the original appear twice.
std::vector<double> embed_hermitian(const cvec& h, int n) {
  std::vector<double> e(static_cast<std::size_t>(2 * n) * (2 * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto v = h[static_cast<std::size_t>(i) * n + j];
      e[static_cast<std::size_t>(i) * 2 * n + j] = v.real();
      e[static_cast<std::size_t>(i) * 2 * n + (n + j)] = -v.imag();
      e[static_cast<std::size_t>(n + i) * 2 * n + j] = v.imag();
      e[static_cast<std::size_t>(n + i) * 2 * n + (n + j)] = v.real();
    }
  return e;
}

cvec cmatmul(const cvec& a, const cvec& b, int n) {
  cvec c(static_cast<std::size_t>(n) * n, {0.0, 0.0});
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const auto aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == std::complex<double>{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j)
        c[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
    }
  return c;
}

cvec adjoint(const cvec& a, int n) {
  cvec c(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c[static_cast<std::size_t>(i) * n + j] = std::conj(a[static_cast<std::size_t>(j) * n + i]);
  return c;
}

// Thermal weights exp(-beta (E - E_min)) / Z.
std::vector<double> boltzmann(const std::vector<double>& energies, double beta) {
  const double emin = *std::min_element(energies.begin(), energies.end());
  std::vector<double> w(energies.size());
  double z = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(-beta * (energies[i] - emin));
    z += w[i];
  }
  for (auto& x : w) x /= z;
  return w;
}

}  // namespace

void jacobi_eigensystem(std::vector<double> a, int n, std::vector<double>& values,
                        std::vector<double>& vectors) {
  vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) vectors[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return vectors[static_cast<std::size_t>(i) * n + j]; };

  double norm = 0.0;
  for (const double x : a) norm += x * x;
  norm = std::sqrt(norm);
  const double tol = 1e-15 * std::max(norm, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
    if (std::sqrt(2.0 * off) <= tol) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  values.resize(n);
  for (int i = 0; i < n; ++i) values[i] = A(i, i);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) { return values[x] < values[y]; });
  std::vector<double> vsort(values);
  std::vector<double> bsort(vectors);
  for (int k = 0; k < n; ++k) {
    values[k] = vsort[perm[k]];
    for (int i = 0; i < n; ++i)
      vectors[static_cast<std::size_t>(i) * n + k] = bsort[static_cast<std::size_t>(i) * n + perm[k]];
  }
}

std::vector<double> matmul_naive(const std::vector<double>& a, std::size_t m, std::size_t k,
                                 const std::vector<double>& b, std::size_t n) {
  std::vector<double> c(m * n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * k + l] * b[l * n + j];
  return c;
}

namespace {

// sqrt of a Hermitian PSD matrix via the real embedding.
cvec hermitian_sqrt(const cvec& a, int n) {
  auto emb = embed_hermitian(a, n);
  std::vector<double> vals, vecs;
  jacobi_eigensystem(std::move(emb), 2 * n, vals, vecs);
  const int m = 2 * n;
  cvec r(static_cast<std::size_t>(n) * n, {0.0, 0.0});
  // Columns of the embedded eigenbasis are (x; y) with complex vector x + iy.
  // Each original eigenvector appears twice; summing sqrt(mu) * v v^dag over
  // all 2n embedded columns and halving reproduces sqrt(A).
  for (int k = 0; k < m; ++k) {
    const double mu = std::max(vals[k], 0.0);
    const double s = std::sqrt(mu);
    if (s == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const std::complex<double> vi{vecs[static_cast<std::size_t>(i) * m + k],
                                    vecs[static_cast<std::size_t>(n + i) * m + k]};
      for (int j = 0; j < n; ++j) {
        const std::complex<double> vj{vecs[static_cast<std::size_t>(j) * m + k],
                                      vecs[static_cast<std::size_t>(n + j) * m + k]};
        r[static_cast<std::size_t>(i) * n + j] += 0.5 * s * vi * std::conj(vj);
      }
    }
  }
  return r;
}

double trace_sqrt_psd(const cvec& a, int n) {
  auto emb = embed_hermitian(a, n);
  std::vector<double> vals, vecs;
  jacobi_eigensystem(std::move(emb), 2 * n, vals, vecs);
  double tr = 0.0;
  for (const double v : vals) tr += std::sqrt(std::max(v, 0.0));
  return 0.5 * tr;
}

}  // namespace

double uhlmann_fidelity(const cvec& a, const cvec& b, int n) {
  const cvec sa = hermitian_sqrt(a, n);
  const cvec inner = cmatmul(sa, cmatmul(b, sa, n), n);
  const double tr = trace_sqrt_psd(inner, n);
  return tr * tr;
}

cvec evolved_thermal_state(const std::vector<double>& h_pre, const std::vector<double>& h_pos,
                           int n, double beta, double t) {
  std::vector<double> ev, vv;
  jacobi_eigensystem(h_pre, n, ev, vv);
  const auto w = boltzmann(ev, beta);
  cvec rho0(static_cast<std::size_t>(n) * n, {0.0, 0.0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += w[k] * vv[static_cast<std::size_t>(i) * n + k] * vv[static_cast<std::size_t>(j) * n + k];
      rho0[static_cast<std::size_t>(i) * n + j] = s;
    }

  std::vector<double> ep, vp;
  jacobi_eigensystem(h_pos, n, ep, vp);
  cvec u(static_cast<std::size_t>(n) * n, {0.0, 0.0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> s{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        const std::complex<double> phase{std::cos(ep[k] * t), -std::sin(ep[k] * t)};
        s += phase * vp[static_cast<std::size_t>(i) * n + k] * vp[static_cast<std::size_t>(j) * n + k];
      }
      u[static_cast<std::size_t>(i) * n + j] = s;
    }
  return cmatmul(u, cmatmul(rho0, adjoint(u, n), n), n);
}

std::vector<double> fidelity_series_dense(const std::vector<double>& h_pre,
                                          const std::vector<double>& h_pos, int n, double beta,
                                          const std::vector<double>& times) {
  std::vector<double> ev, vv;
  jacobi_eigensystem(h_pre, n, ev, vv);
  const auto w = boltzmann(ev, beta);
  cvec rho0(static_cast<std::size_t>(n) * n, {0.0, 0.0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += w[k] * vv[static_cast<std::size_t>(i) * n + k] * vv[static_cast<std::size_t>(j) * n + k];
      rho0[static_cast<std::size_t>(i) * n + j] = s;
    }

  std::vector<double> out;
  out.reserve(times.size());
  for (const double t : times) {
    const cvec rt = evolved_thermal_state(h_pre, h_pos, n, beta, t);
    out.push_back(uhlmann_fidelity(rho0, rt, n));
  }
  return out;
}

std::vector<double> mode_coefficients_direct(const std::vector<double>& field, int half_length,
                                             int m_plus) {
  const int count = m_plus + half_length + 1;
  if (count <= 0 || count > static_cast<int>(field.size()))
    throw std::invalid_argument("mode_coefficients_direct: bad interface");
  std::vector<long double> raw(count);
  long double run = 1.0L;
  raw[0] = run;  // common prefactor from the out-of-chain first factor cancels
  for (int i = 1; i < count; ++i) {
    run *= static_cast<long double>(field[i - 1]);
    raw[i] = run;
  }
  long double norm = 0.0L;
  for (const auto x : raw) norm += x * x;
  norm = std::sqrt(norm);
  std::vector<double> alpha(count);
  for (int i = 0; i < count; ++i) alpha[i] = static_cast<double>(raw[i] / norm);
  return alpha;
}

}  // namespace qti::reference
