#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "scatbound/geometry.hpp"
#include "scatbound/greens.hpp"

namespace scatbound {

/// Field-deviation budget result. value may be +infinity for the provable
/// bound, in which case divergent is set.
struct AlphaResult {
  double value = 0.0;
  bool divergent = false;
  std::vector<double> restart_values;          // local estimator only
  std::vector<Eigen::VectorXd> restart_maps;   // optimizer chi per restart
  int failed_restarts = 0;
};

/// Provable upper bound on ||E - E_ref|| / ||E_ref|| over the contrast
/// box: q / (1 - q) with q = delta_chi * ||(I - chi_bar G)^{-1} G||,
/// infinity (divergent flag) when q >= 1.
AlphaResult alpha_ub(const GreensOperator& g, double chi_minus, double chi_plus);

/// Multi-start local maximization of ||E(chi) - E_ref|| / ||E_ref|| by
/// projected gradient ascent on the squared objective with adjoint
/// gradients. Failed restarts (VIE solve failures) are excluded and
/// counted. Deterministic for a given seed.
AlphaResult alpha_loc(const GreensOperator& g, double chi_minus, double chi_plus,
                      const FieldArray& e_inc, const FieldArray& e_ref, int restarts,
                      std::uint64_t seed);

}  // namespace scatbound
