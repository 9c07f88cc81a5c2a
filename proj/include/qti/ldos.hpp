#ifndef QTI_LDOS_HPP
#define QTI_LDOS_HPP

#include <complex>
#include <vector>

#include "qti/majorana.hpp"

namespace qti {

// Local density of states of the Majorana lattice per unit cell, with the A
// and B components of cell j summed and the density rescaled by
// norm_lambda = bandwidth / (2N). Two routes: a histogram of the full
// eigendecomposition (the oracle) and the Haydock continued-fraction
// recursion.

struct LdosGrid {
  int cells = 0;
  int bins = 0;
  std::vector<double> energies;  // bin centers, uniform
  std::vector<double> values;    // cell-major: values[cell*bins + bin]
  double norm_lambda = 0.0;
  double bandwidth = 0.0;

  double at(int cell, int bin) const { return values[static_cast<std::size_t>(cell) * bins + bin]; }
  double bin_width() const { return energies.size() > 1 ? energies[1] - energies[0] : 0.0; }
};

struct LanczosCoeffs {
  std::vector<double> a;  // diagonal, size depth
  std::vector<double> b;  // off-diagonal, b[k] couples levels k-1 and k; b[0] = 0
  int depth = 0;
  bool breakdown = false;  // recursion terminated early, finite fraction is exact
};

// eta = 0 gives the raw binned point measure; eta > 0 convolves each bin's
// mass with a Lorentzian of half-width eta (exact integral over the bin).
LdosGrid ldos_histogram(const SpectralData& s, int bins, double eta = 0.0);

// Plain three-term recursion seeded at basis index seed; no
// reorthogonalization, depth capped at the matrix dimension.
LanczosCoeffs lanczos_tridiag(const MajoranaMatrix& m, int seed_index, int max_depth);

// Continued fraction at z, closed with a square-root terminator built from
// (a_inf, b_inf) unless the recursion broke down.
std::complex<double> green_continued_fraction(const LanczosCoeffs& lc, std::complex<double> z,
                                              double a_inf, double b_inf);

// LDOS column of one unit cell on the energies grid.
std::vector<double> ldos_recursion_cell(const MajoranaMatrix& m, int cell, int depth, double eta,
                                        const std::vector<double>& energies, double norm_lambda);

// Full grid via the recursion; spectral bounds and the bandwidth come from an
// eigenvalue-only diagonalization so both methods share the same grid and
// normalization.
LdosGrid ldos_recursion(const MajoranaMatrix& m, int depth, double eta, int bins);

// Shared grid construction: bins centered on [lo - pad, hi + pad].
std::vector<double> ldos_energy_grid(double lo, double hi, double pad, int bins);

}  // namespace qti

#endif
