#ifndef QTI_REFERENCE_HPP
#define QTI_REFERENCE_HPP

#include <complex>
#include <vector>

namespace qti::reference {

// Serial reference implementations. These are deliberately simple and
// independent of the production kernels; the test suites use them as oracles
// and the benchmark tool compares against them. Nothing here is used on the
// production path.

// Cyclic Jacobi eigensolver for a dense symmetric matrix (row-major).
// values ascending; vectors row-major with component i of vector k at
// vectors[i*n + k].
void jacobi_eigensystem(std::vector<double> a, int n, std::vector<double>& values,
                        std::vector<double>& vectors);

std::vector<double> matmul_naive(const std::vector<double>& a, std::size_t m, std::size_t k,
                                 const std::vector<double>& b, std::size_t n);

using cvec = std::vector<std::complex<double>>;

// Uhlmann-Jozsa fidelity [tr sqrt(sqrt(a) b sqrt(a))]^2 for Hermitian PSD
// matrices, via Jacobi on the real embedding of complex Hermitian matrices.
double uhlmann_fidelity(const cvec& a, const cvec& b, int n);

// Fidelity series for a thermal state of h_pre evolved under h_pos, computed
// with dense complex arithmetic end to end. Feasible up to dim ~ 256.
std::vector<double> fidelity_series_dense(const std::vector<double>& h_pre,
                                          const std::vector<double>& h_pos, int n, double beta,
                                          const std::vector<double>& times);

// Dense complex rho(t) = U rho0 U^dag for the same setup, for invariance tests.
cvec evolved_thermal_state(const std::vector<double>& h_pre, const std::vector<double>& h_pos,
                           int n, double beta, double t);

// Localized-mode coefficients by direct long-double products, usable while the
// partial products stay inside long-double range (small chains).
std::vector<double> mode_coefficients_direct(const std::vector<double>& field, int half_length,
                                             int m_plus);

}  // namespace qti::reference

#endif
