#include "qti/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qti/eigen_sym.hpp"
#include "qti/linalg.hpp"

namespace qti {

double MajoranaMatrix::radius_bound() const {
  double r = 0.0;
  for (int i = 0; i < dim; ++i) {
    double row = std::abs(diagonal[i]);
    if (i > 0) row += std::abs(subdiagonal[i - 1]);
    if (i + 1 < dim) row += std::abs(subdiagonal[i]);
    r = std::max(r, row);
  }
  return r;
}

double SpectralData::spectral_radius() const {
  if (lambdas.empty()) return 0.0;
  return std::max(std::abs(lambdas.front()), std::abs(lambdas.back()));
}

std::vector<double> SpectralData::eigenvector(int n) const {
  std::vector<double> v(dim);
  for (int i = 0; i < dim; ++i) v[i] = vectors[static_cast<std::size_t>(i) * dim + n];
  return v;
}

MajoranaMatrix build_h_m(const FieldProfile& profile, double coupling) {
  const int cells = profile.length();
  if (cells < 1) throw std::invalid_argument("empty field profile");
  MajoranaMatrix m;
  m.dim = 2 * cells;
  m.diagonal.assign(m.dim, 0.0);
  m.subdiagonal.assign(m.dim - 1, 0.0);
  for (int k = 0; k < cells; ++k) {
    m.subdiagonal[2 * k] = 0.5 * profile.values[k];          // A_j - B_j
    if (k + 1 < cells) m.subdiagonal[2 * k + 1] = -0.5 * coupling;  // B_j - A_{j+1}
  }
  return m;
}

SpectralData diagonalize(const MajoranaMatrix& m, bool with_vectors) {
  SpectralData s;
  s.dim = m.dim;
  if (with_vectors) {
    s.vectors.assign(static_cast<std::size_t>(m.dim) * m.dim, 0.0);
    for (int i = 0; i < m.dim; ++i) s.vectors[static_cast<std::size_t>(i) * m.dim + i] = 1.0;
    s.lambdas = m.diagonal;
    tridiag_eigensystem(s.lambdas, m.subdiagonal, s.vectors.data(), m.dim);
  } else {
    s.lambdas = tridiag_eigenvalues(m.diagonal, m.subdiagonal);
  }

  const int pairs = m.dim / 2;
  s.epsilons.resize(pairs);
  for (int k = 0; k < pairs; ++k) s.epsilons[k] = 4.0 * std::abs(s.lambdas[pairs + k]);
  std::sort(s.epsilons.begin(), s.epsilons.end());

  double eg = 0.0;
  for (const double eps : s.epsilons) eg += eps;
  s.ground_energy = -0.5 * eg;

  const double radius = s.spectral_radius();
  s.degenerate_zero_pair =
      std::max(std::abs(s.lambdas[pairs - 1]), std::abs(s.lambdas[pairs])) < 1e-14 * radius;
  return s;
}

ChiralReport check_chiral_pairing(const MajoranaMatrix& m, const SpectralData& s) {
  ChiralReport rep;
  const int n = s.dim;
  const double radius = std::max(s.spectral_radius(), 1e-300);
  rep.tolerance = 1e-10 * radius;

  for (int k = 0; k < n; ++k) {
    // ascending-sorted symmetric spectrum pairs k with n-1-k
    rep.max_pair_gap = std::max(rep.max_pair_gap, std::abs(s.lambdas[k] + s.lambdas[n - 1 - k]));
  }

  if (s.has_vectors()) {
    std::vector<double> cphi(n), hphi(n);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        const double sgn = (i % 2 == 0) ? 1.0 : -1.0;  // +1 on A sites, -1 on B sites
        cphi[i] = sgn * s.vectors[static_cast<std::size_t>(i) * n + k];
      }
      tridiag_matvec(m.diagonal, m.subdiagonal, cphi.data(), hphi.data());
      double res = 0.0;
      for (int i = 0; i < n; ++i) {
        const double d = hphi[i] + s.lambdas[k] * cphi[i];
        res += d * d;
      }
      rep.max_vector_residual = std::max(rep.max_vector_residual, std::sqrt(res));
    }
  }

  rep.symmetric = rep.max_pair_gap <= rep.tolerance &&
                  rep.max_vector_residual <= 1e-9 * std::max(1.0, radius);
  return rep;
}

}  // namespace qti
