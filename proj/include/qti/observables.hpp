#ifndef QTI_OBSERVABLES_HPP
#define QTI_OBSERVABLES_HPP

#include <string>
#include <vector>

#include "qti/model.hpp"

namespace qti {

// Ground-state observables from energy derivatives: sigma_z_j = dE_g/df_j and
// chi_z_j = d^2 E_g/df_j^2, evaluated by central finite differences with one
// re-diagonalization of the Majorana lattice per perturbed field. Each site is
// independent, so the sweeps parallelize over j.
struct ObservableSeries {
  ChainParams params;
  std::vector<double> xi;       // scaled positions j/N
  std::vector<double> field;    // f_j
  std::vector<double> sigma_z;  // per-site magnetization
  std::vector<double> chi_z;    // per-site susceptibility (empty unless computed)
  std::vector<std::string> warnings;
};

struct CrossingReport {
  std::vector<int> n_values;
  // one entry per pair of N values, positive side then mirrored side
  std::vector<double> crossings_plus;
  std::vector<double> crossings_minus;
  double mean_plus = 0.0;
  double mean_minus = 0.0;
  double spread_plus = 0.0;   // max - min over pairs
  double spread_minus = 0.0;
};

ObservableSeries magnetization(const FieldProfile& profile, double step_scale = 1e-5);

// Fills chi_z (sigma_z untouched). A second difference taken at twice the
// step flags sites where the quotient is noise-dominated.
ObservableSeries susceptibility(const FieldProfile& profile, double step_scale = 1e-3);

double ground_energy_of(const FieldProfile& profile);

// Intersection abscissae of the magnetization curves of several chain sizes
// at fixed (g_N, delta), by linear interpolation in xi. Throws when a pair of
// curves has no transversal crossing away from the edges.
CrossingReport scaling_collapse(const std::vector<ObservableSeries>& series);

}  // namespace qti

#endif
