#include "scatbound/boxopt.hpp"

#include <cmath>

namespace scatbound {

namespace {

Eigen::VectorXd clamp(const Eigen::VectorXd& x, double lo, double hi) {
  return x.cwiseMax(lo).cwiseMin(hi);
}

}  // namespace

BoxAscentResult maximize_box(const BoxObjective& objective, Eigen::VectorXd x0,
                             double lower, double upper, const BoxAscentOptions& opts) {
  BoxAscentResult res;
  res.x = clamp(std::move(x0), lower, upper);

  Eigen::VectorXd grad(res.x.size());
  double value = objective(res.x, &grad);
  double step = opts.initial_step;

  for (int it = 0; it < opts.max_iterations; ++it) {
    res.iterations = it + 1;
    // Backtracking Armijo on the projected step.
    bool accepted = false;
    Eigen::VectorXd candidate;
    double cand_value = value;
    for (int bt = 0; bt < 60; ++bt) {
      candidate = clamp(res.x + step * grad, lower, upper);
      const Eigen::VectorXd delta = candidate - res.x;
      if (delta.squaredNorm() == 0.0) break;  // stationary boundary point
      cand_value = objective(candidate, nullptr);
      if (cand_value >= value + 1e-4 * grad.dot(delta)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      res.converged = true;  // no ascent direction left at this scale
      break;
    }
    const double change = std::abs(cand_value - value);
    res.x = candidate;
    value = objective(res.x, &grad);  // same point as cand_value, now with gradient
    step *= 2.0;
    if (change <= opts.rel_change_tol * std::max(std::abs(value), 1e-300)) {
      res.converged = true;
      break;
    }
  }
  res.value = value;
  return res;
}

}  // namespace scatbound
