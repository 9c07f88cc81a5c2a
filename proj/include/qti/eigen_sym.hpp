#ifndef QTI_EIGEN_SYM_HPP
#define QTI_EIGEN_SYM_HPP

#include <vector>

namespace qti {

// Symmetric eigensolvers built around the implicit-shift QL iteration for
// tridiagonal matrices, with Householder reduction in front for dense input.
// Eigenvalues come back ascending. When eigenvectors are requested they are
// stored row-major with component i of eigenvector k at z[i*n + k], and a
// deterministic convention is applied: ties in the eigenvalue sort are broken
// by the row index of the largest-magnitude component, whose sign is fixed
// positive. The convention makes golden-file output stable across platforms
// and thread counts.

// Eigenvalues of the tridiagonal (diag d of size n, subdiagonal e of size n-1).
std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e);

// Full eigensystem of the tridiagonal. z must point to an n x n row-major
// matrix holding the starting basis: the identity for eigenvectors of the
// tridiagonal itself, or the orthogonal reduction matrix when chained after
// a Householder step. QL rotations are right-applied to z.
void tridiag_eigensystem(std::vector<double>& d, std::vector<double> e, double* z, int n);

// Householder reduction of a symmetric n x n row-major matrix to tridiagonal
// form. With accumulate=true, q receives the orthogonal transform; a is
// destroyed either way.
void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e, bool accumulate);

std::vector<double> dense_sym_eigenvalues(std::vector<double> a, int n);

// values: size n ascending; vectors: n x n row-major as described above.
void dense_sym_eigensystem(std::vector<double> a, int n,
                           std::vector<double>& values, std::vector<double>& vectors);

}  // namespace qti

#endif
