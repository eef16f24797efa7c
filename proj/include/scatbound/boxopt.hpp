#pragma once

#include <Eigen/Dense>
#include <functional>

namespace scatbound {

struct BoxAscentOptions {
  int max_iterations = 2000;
  double rel_change_tol = 1e-8;
  double initial_step = 1.0;
};

struct BoxAscentResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Objective callback: returns f(x) and fills *grad when non-null.
using BoxObjective = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd*)>;

/// Projected gradient ascent on a box with Armijo backtracking. The final
/// iterate always satisfies the bounds exactly (projection is the last
/// step of every iteration).
BoxAscentResult maximize_box(const BoxObjective& objective, Eigen::VectorXd x0,
                             double lower, double upper, const BoxAscentOptions& opts = {});

}  // namespace scatbound
