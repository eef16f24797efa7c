#include "scatbound/linalg.hpp"

#include "scatbound/rng.hpp"

namespace scatbound {

LuSolver::LuSolver(Eigen::MatrixXcd matrix, double max_condition)
    : matrix_(std::move(matrix)), lu_(matrix_) {
  rcond_ = lu_.rcond();
  if (!(rcond_ > 1.0 / max_condition))
    throw SingularSystemError("LuSolver: resonant/singular system (rcond = " +
                              std::to_string(rcond_) + ")");
}

Eigen::VectorXcd LuSolver::solve(const Eigen::VectorXcd& rhs) const {
  Eigen::VectorXcd x = lu_.solve(rhs);
  x += lu_.solve(rhs - matrix_ * x);  // one refinement step
  return x;
}

Eigen::VectorXcd LuSolver::solve_adjoint(const Eigen::VectorXcd& rhs) const {
  Eigen::VectorXcd x = lu_.adjoint().solve(rhs);
  x += lu_.adjoint().solve(rhs - matrix_.adjoint() * x);
  return x;
}

double operator_norm(const LinearMap& apply, const LinearMap& apply_adjoint, int dim,
                     const PowerIterationOptions& opts) {
  SplitMix64 rng(opts.seed);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i)
    v[i] = std::complex<double>(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
  v.normalize();

  double estimate = 0.0;
  int stable = 0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    Eigen::VectorXcd mv = apply(v);
    const double next = mv.norm();  // Rayleigh estimate of sigma_max at unit v
    Eigen::VectorXcd w = apply_adjoint(mv);
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;  // v in the kernel of M^H M: norm 0 matrix
    v = w / wn;

    if (std::abs(next - estimate) <= opts.rel_tol * std::max(next, 1e-300)) {
      if (++stable >= 3) return next;
    } else {
      stable = 0;
    }
    estimate = next;
  }
  const double gap = std::abs(apply(v).norm() - estimate) / std::max(estimate, 1e-300);
  throw ConvergenceError("operator_norm: power iteration did not converge", estimate, gap);
}

double operator_norm(const Eigen::MatrixXcd& m, const PowerIterationOptions& opts) {
  return operator_norm([&](const Eigen::VectorXcd& x) { return (m * x).eval(); },
                       [&](const Eigen::VectorXcd& x) { return (m.adjoint() * x).eval(); },
                       static_cast<int>(m.cols()), opts);
}

}  // namespace scatbound
