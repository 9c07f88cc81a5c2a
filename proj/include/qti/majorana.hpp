#ifndef QTI_MAJORANA_HPP
#define QTI_MAJORANA_HPP

#include <vector>

#include "qti/model.hpp"

namespace qti {

// Single-particle hopping matrix of the Majorana lattice: a 2L x 2L real
// symmetric tridiagonal matrix in the interleaved basis
// A_{-N}, B_{-N}, A_{-N+1}, ..., B_N. Intracell bonds A_j-B_j carry f_j/2,
// intercell bonds B_j-A_{j+1} carry -J/2, the diagonal is zero. Structurally
// a generalized SSH chain.
struct MajoranaMatrix {
  int dim = 0;
  std::vector<double> diagonal;     // all zeros for the physical model
  std::vector<double> subdiagonal;  // size dim-1

  int cells() const { return dim / 2; }
  // Gershgorin bound on the spectral radius.
  double radius_bound() const;
};

struct SpectralData {
  int dim = 0;
  std::vector<double> lambdas;   // ascending, size dim
  std::vector<double> vectors;   // row-major; component i of eigenvector n at [i*dim + n]
  std::vector<double> epsilons;  // quasiparticle energies 4|lambda|, one per chiral pair
  double ground_energy = 0.0;
  bool degenerate_zero_pair = false;  // both near-zero eigenvalues below resolution

  bool has_vectors() const { return !vectors.empty(); }
  double spectral_radius() const;
  // Splitting of the hybridized near-zero pair; 0 when numerically degenerate.
  double epsilon0() const { return degenerate_zero_pair ? 0.0 : epsilons.front(); }
  std::vector<double> eigenvector(int n) const;
};

struct ChiralReport {
  double max_pair_gap = 0.0;         // worst |lambda_n + lambda_partner|
  double max_vector_residual = 0.0;  // worst |h (C phi) + lambda (C phi)|
  double tolerance = 0.0;
  bool symmetric = false;
};

MajoranaMatrix build_h_m(const FieldProfile& profile, double coupling);

SpectralData diagonalize(const MajoranaMatrix& m, bool with_vectors = true);

// Verifies that C phi_n is an eigenvector with eigenvalue -lambda_n, where C
// flips the sign on B sites. Report-only; a nonzero diagonal breaks the
// symmetry and gets flagged.
ChiralReport check_chiral_pairing(const MajoranaMatrix& m, const SpectralData& s);

}  // namespace qti

#endif
