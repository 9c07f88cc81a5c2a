#ifndef QTI_ZEROMODES_HPP
#define QTI_ZEROMODES_HPP

#include <vector>

#include "qti/majorana.hpp"
#include "qti/model.hpp"

namespace qti {

// Localized-mode coefficients alpha_j on j = -N..m_plus, built from partial
// products of the field and normalized so sum alpha^2 = 1. The mirror mode
// lives on B sites with coefficients alpha_{-j}. All products are formed in
// log space: for N ~ 80 the raw partial products leave double range by
// hundreds of orders of magnitude.
struct ZeroModeData {
  std::vector<double> alpha;      // normalized, index j + N, j = -N..m_plus
  std::vector<double> log_alpha;  // log of the same values
  double omega = 0.0;             // normalization sum (may overflow to inf)
  double log_omega = 0.0;
  double delta_prod = 0.0;        // product of f over [m_minus, m_plus] (may underflow)
  double log_delta = 0.0;
  double lambda0 = 0.0;           // hybridization matrix element, delta_prod * alpha_peak^2 / 2
  double epsilon0_analytic = 0.0; // 4 lambda0
  int m_minus = 0;
  int m_plus = 0;
  bool clamped = false;
  int half_length = 0;

  double alpha_at(int j) const { return alpha[j + half_length]; }
  double alpha_peak() const { return alpha_at(m_minus); }
};

// Full 2L-dimensional A/B-sublattice mode vectors and their hybridized
// combinations (phi_a +- phi_b)/sqrt(2).
struct ModeVectors {
  int dim = 0;
  std::vector<double> phi_a;      // supported on A sites j = -N..m_plus
  std::vector<double> phi_b;      // mirror on B sites j = m_minus..N
  std::vector<double> phi_plus;
  std::vector<double> phi_minus;
};

struct ResidualReport {
  double norm_a = 0.0;       // |h phi_a|
  double norm_b = 0.0;       // |h phi_b|
  double expected = 0.0;     // (delta_prod/2) alpha_peak
  double tolerance = 0.0;    // max(1e-10 relative, double-precision matvec floor)
  bool verified = false;
};

struct GaussianFit {
  double center = 0.0;
  double curvature = 0.0;           // expected sqrt((J - delta) g)
  double max_pointwise_error = 0.0; // on alpha over the fit window
  int window_lo = 0;
  int window_hi = 0;
  bool edge_truncated = false;
};

struct SplitPoint {
  double g = 0.0;
  double epsilon0_analytic = 0.0;
  double epsilon0_numeric = 0.0;
};

ZeroModeData analytic_modes(const FieldProfile& profile, const Interfaces& m);

ModeVectors make_mode_vectors(const ZeroModeData& data);

ResidualReport residual_check(const MajoranaMatrix& m, const ModeVectors& v,
                              const ZeroModeData& data);

GaussianFit gaussian_fit(const ZeroModeData& data, const ChainParams& params);

// Per-vector norm of the projection of the hybridized analytic modes onto the
// span of the two smallest-|lambda| numerical eigenvectors. Subspace-based, so
// it is stable when the pair is numerically degenerate.
double mode_overlap(const ModeVectors& v, const SpectralData& s);

// Splitting vs field strength at fixed (N, delta): analytic formula against
// full diagonalization.
std::vector<SplitPoint> splitting_sweep(const ChainParams& base, const std::vector<double>& gs);

}  // namespace qti

#endif
