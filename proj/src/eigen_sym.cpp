#include "qti/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qti {

namespace {

constexpr int kMaxIter = 50;

// Apply a batch of Givens rotations recorded by one QL sweep to the columns
// of z. Rotation i mixes columns (i, i+1); the sweep runs i = hi..lo
// descending. Batching lets each row be processed independently, which is
// where the O(n^3) accumulation cost parallelizes.
void apply_rotations(double* z, int n, const std::vector<double>& cs,
                     const std::vector<double>& sn, int lo, int hi) {
  if (!z || hi < lo) return;
#pragma omp parallel for schedule(static) if (n > 64)
  for (int k = 0; k < n; ++k) {
    double* row = z + static_cast<std::size_t>(k) * n;
    for (int i = hi; i >= lo; --i) {
      const double f = row[i + 1];
      row[i + 1] = sn[i] * row[i] + cs[i] * f;
      row[i] = cs[i] * row[i] - sn[i] * f;
    }
  }
}

// Implicit-shift QL with Wilkinson shift. d/e are modified in place; e has
// size n with e[n-1] = 0. If z is non-null the rotations are accumulated.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, double* z, int n) {
  if (n <= 1) return;
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<double> cs(n), sn(n);

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > kMaxIter) {
        std::ostringstream msg;
        msg << "tridiagonal QL failed to converge: n=" << n << " block=[" << l << "," << m
            << "] |e|=" << std::abs(e[l]) << " after " << kMaxIter << " iterations";
        throw std::runtime_error(msg.str());
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        cs[i] = c;
        sn[i] = s;
      }
      if (underflow) {
        apply_rotations(z, n, cs, sn, i + 1, m - 1);
        continue;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
      apply_rotations(z, n, cs, sn, l, m - 1);
    }
  }
}

// Sort ascending; with vectors, break eigenvalue ties by the row index of the
// largest-magnitude component and fix that component's sign positive.
void canonicalize(std::vector<double>& d, double* z, int n) {
  if (!z) {
    std::sort(d.begin(), d.end());
    return;
  }
  std::vector<int> peak(n);
  for (int k = 0; k < n; ++k) {
    int best = 0;
    double bestmag = -1.0;
    for (int i = 0; i < n; ++i) {
      const double mag = std::abs(z[static_cast<std::size_t>(i) * n + k]);
      if (mag > bestmag) {
        bestmag = mag;
        best = i;
      }
    }
    peak[k] = best;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (d[a] != d[b]) return d[a] < d[b];
    return peak[a] < peak[b];
  });
  std::vector<double> dnew(n);
  std::vector<double> buf(static_cast<std::size_t>(n) * n);
  std::vector<double> sign(n);
  for (int k = 0; k < n; ++k) {
    dnew[k] = d[perm[k]];
    sign[k] = z[static_cast<std::size_t>(peak[perm[k]]) * n + perm[k]] < 0.0 ? -1.0 : 1.0;
  }
#pragma omp parallel for schedule(static) if (n > 64)
  for (int i = 0; i < n; ++i) {
    const double* src = z + static_cast<std::size_t>(i) * n;
    double* dst = buf.data() + static_cast<std::size_t>(i) * n;
    for (int k = 0; k < n; ++k) dst[k] = sign[k] * src[perm[k]];
  }
  d.swap(dnew);
  std::copy(buf.begin(), buf.end(), z);
}

}  // namespace

std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  e.resize(n, 0.0);
  ql_implicit(d, e, nullptr, n);
  canonicalize(d, nullptr, n);
  return d;
}

void tridiag_eigensystem(std::vector<double>& d, std::vector<double> e, double* z, int n) {
  e.resize(n, 0.0);
  ql_implicit(d, e, z, n);
  canonicalize(d, z, n);
}

void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e, bool accumulate) {
  d.assign(n, 0.0);
  std::vector<double> esh(n, 0.0);  // esh[i] couples rows i-1, i
  auto A = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * n + c]; };

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
      if (scale == 0.0) {
        esh[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        esh[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        // p = A u / h accumulated into esh[0..l]; the row-sweeps below are the
        // O(i^2) cost of each reduction step.
        std::vector<double> p(l + 1, 0.0);
#pragma omp parallel for schedule(static) if (l > 96)
        for (int j = 0; j <= l; ++j) {
          if (accumulate) A(j, i) = A(i, j) / h;
          double gg = 0.0;
          for (int k = 0; k <= j; ++k) gg += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) gg += A(k, j) * A(i, k);
          p[j] = gg / h;
        }
        f = 0.0;
        for (int j = 0; j <= l; ++j) f += p[j] * A(i, j);
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) p[j] -= hh * A(i, j);
#pragma omp parallel for schedule(static) if (l > 96)
        for (int j = 0; j <= l; ++j) {
          const double fj = A(i, j);
          const double gj = p[j];
          for (int k = 0; k <= j; ++k) A(j, k) -= fj * p[k] + gj * A(i, k);
        }
      }
    } else {
      esh[i] = A(i, l);
    }
    d[i] = h;
  }

  if (accumulate) {
    d[0] = 0.0;
    esh[0] = 0.0;
    for (int i = 0; i < n; ++i) {
      const int l = i - 1;
      if (d[i] != 0.0) {
#pragma omp parallel for schedule(static) if (l > 96)
        for (int j = 0; j <= l; ++j) {
          double g = 0.0;
          for (int k = 0; k <= l; ++k) g += A(i, k) * A(k, j);
          for (int k = 0; k <= l; ++k) A(k, j) -= g * A(k, i);
        }
      }
      d[i] = A(i, i);
      A(i, i) = 1.0;
      for (int j = 0; j <= l; ++j) A(j, i) = A(i, j) = 0.0;
    }
  } else {
    for (int i = 0; i < n; ++i) d[i] = A(i, i);
  }

  e.assign(n > 1 ? n - 1 : 0, 0.0);
  for (int i = 1; i < n; ++i) e[i - 1] = esh[i];
}

std::vector<double> dense_sym_eigenvalues(std::vector<double> a, int n) {
  std::vector<double> d, e;
  householder_tridiag(a, n, d, e, false);
  return tridiag_eigenvalues(std::move(d), std::move(e));
}

void dense_sym_eigensystem(std::vector<double> a, int n,
                           std::vector<double>& values, std::vector<double>& vectors) {
  std::vector<double> e;
  householder_tridiag(a, n, values, e, true);
  vectors = std::move(a);
  tridiag_eigensystem(values, e, vectors.data(), n);
}

}  // namespace qti
