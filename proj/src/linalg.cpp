#include "qti/linalg.hpp"

#include <cmath>

namespace qti {

void matmul_atb(const double* a, std::size_t k, std::size_t m,
                const double* b, std::size_t n, double* c) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const double ali = a[l * m + i];
      if (ali == 0.0) continue;
      const double* bl = b + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ali * bl[j];
    }
  }
}

void matmul_abt(const double* a, std::size_t m, std::size_t k,
                const double* b, std::size_t n, double* c) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double* bj = b + j * k;
      double s = 0.0;
      for (std::size_t l = 0; l < k; ++l) s += ai[l] * bj[l];
      ci[j] = s;
    }
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double nrm2(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return std::sqrt(s);
}

void tridiag_matvec(const std::vector<double>& diag, const std::vector<double>& sub,
                    const double* x, double* y) {
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * x[i];
    if (i > 0) s += sub[i - 1] * x[i - 1];
    if (i + 1 < n) s += sub[i] * x[i + 1];
    y[i] = s;
  }
}

}  // namespace qti
