#ifndef QTI_QUENCH_HPP
#define QTI_QUENCH_HPP

#include <cstdint>
#include <vector>

#include "qti/model.hpp"
#include "qti/zeromodes.hpp"

namespace qti {

// Full many-body engine on the sigma-z product basis. Basis state b has bit
// s = j + N set when sigma_z_j = +1; sigma_x flips the bit; Jordan-Wigner
// strings contribute (-1)^(set bits below s). Everything is real symmetric
// except the time evolution itself, which is handled in the eigenbasis.

struct ManyBodyOperator {
  int sites = 0;
  std::size_t dim = 0;
  std::vector<double> mat;  // row-major dense

  double& at(std::size_t r, std::size_t c) { return mat[r * dim + c]; }
  double at(std::size_t r, std::size_t c) const { return mat[r * dim + c]; }
};

struct MbEigen {
  std::vector<double> values;
  std::vector<double> vectors;  // row-major, component i of vector k at [i*dim + k]
};

struct ThermalState {
  double beta = 0.0;
  std::vector<double> weights;  // Boltzmann populations, sum = 1
  MbEigen basis;                // eigenbasis of the generating Hamiltonian
};

struct QuenchSetup {
  double kappa = 0.0;
  double beta = 1.0;
  std::vector<double> times;
  ManyBodyOperator h_pre;
  ManyBodyOperator h_pos;
};

struct QuenchResult {
  std::vector<double> times;
  std::vector<double> fidelity;
  double epsilon0_ref = 0.0;  // splitting from the Majorana spectrum, for comparison
};

struct PeriodEstimate {
  double period = 0.0;
  double frequency = 0.0;
  double first_revival = 0.0;  // time of the first fidelity revival, cross-check
};

// Hard cap keeps the dense matrix within memory; the message carries the
// estimate when exceeded.
ManyBodyOperator build_spin_hamiltonian(const FieldProfile& profile, int site_cap = 14);

// Parity eigenvalues (-1)^popcount per basis state.
std::vector<double> parity_diagonal(int sites);

// Zero-mode annihilation operator from the localized-mode coefficients,
// assembled from Jordan-Wigner fermions. Not Hermitian; d0 + d0^T is.
ManyBodyOperator build_d0(const ZeroModeData& zm);

// Same operator from the spin-string form (sigma-x and sigma-y strings); the
// two constructions must agree entrywise.
ManyBodyOperator build_d0_spin_strings(const ZeroModeData& zm);

MbEigen eig(const ManyBodyOperator& op, bool vectors = true);

ThermalState thermal_state(const ManyBodyOperator& h, double beta);

// Dense density matrix, mostly for oracle comparisons.
std::vector<double> thermal_density_matrix(const ThermalState& ts);

QuenchSetup make_quench_setup(const FieldProfile& profile, const ZeroModeData& zm, double kappa,
                              double beta, const std::vector<double>& times);

// Uhlmann-Jozsa fidelity L(t) between the thermal state of h_pre and its
// evolution under h_pos.
QuenchResult evolve_and_fidelity(const QuenchSetup& setup);

// Dominant nonzero frequency of 1 - L(t) on a uniform grid, located by a
// zero-padded discrete Fourier transform with quadratic peak interpolation.
// Throws when the signal is flat.
PeriodEstimate extract_period(const std::vector<double>& times, const std::vector<double>& fidelity);

}  // namespace qti

#endif
