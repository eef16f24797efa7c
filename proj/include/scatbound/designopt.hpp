#pragma once

#include <Eigen/Dense>
#include <vector>

#include "scatbound/geometry.hpp"
#include "scatbound/greens.hpp"

namespace scatbound {

struct LocalOptRun {
  Eigen::VectorXd best_chi;
  double best_sigma = 0.0;           // max over restart finals, sigma units
  std::vector<double> restart_values;
  std::vector<int> restart_iterations;
  int failed_restarts = 0;
  std::uint64_t seed = 0;
};

/// Gradient of sigma_scat = 2 Im<E_inc, diag(chi) E(chi)> with respect to
/// the per-pixel contrast, accounting for dE/dchi through the VIE: one
/// forward solve plus one adjoint solve.
Eigen::VectorXd adjoint_gradient(const GreensOperator& g, const ContrastMap& chi,
                                 const FieldArray& e_inc);

/// Multi-start projected gradient ascent on sigma_scat over the contrast
/// box. The restart sequence is deterministic per seed: chi = chi_plus,
/// chi = chi_bar, then i.i.d. uniform maps.
LocalOptRun local_optimize(const GreensOperator& g, const FieldArray& e_inc,
                           double chi_minus, double chi_plus, int restarts,
                           std::uint64_t seed);

}  // namespace scatbound
