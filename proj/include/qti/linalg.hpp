#ifndef QTI_LINALG_HPP
#define QTI_LINALG_HPP

#include <cstddef>
#include <vector>

namespace qti {

// Dense kernels on row-major storage. All loops accumulate in a fixed order
// per output entry, so results are independent of the thread count.

// C (m x n) = A^T B with A (k x m), B (k x n).
void matmul_atb(const double* a, std::size_t k, std::size_t m,
                const double* b, std::size_t n, double* c);

// C (m x n) = A B^T with A (m x k), B (n x k).
void matmul_abt(const double* a, std::size_t m, std::size_t k,
                const double* b, std::size_t n, double* c);

double dot(const double* x, const double* y, std::size_t n);
double nrm2(const double* x, std::size_t n);

// y = T x for a symmetric tridiagonal T given by diag/sub.
void tridiag_matvec(const std::vector<double>& diag, const std::vector<double>& sub,
                    const double* x, double* y);

}  // namespace qti

#endif
