#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>

namespace scatbound {

struct SingularSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& msg, double last_estimate, double gap)
      : std::runtime_error(msg), last_estimate(last_estimate), gap(gap) {}
  double last_estimate;
  double gap;
};

/// Dense LU (partial pivoting) with a reciprocal-condition guard and one
/// step of iterative refinement on every solve. Factors once, solves many.
class LuSolver {
 public:
  /// Throws SingularSystemError when the condition estimate exceeds 1e14.
  explicit LuSolver(Eigen::MatrixXcd matrix, double max_condition = 1e14);

  Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const;
  /// Solves A^H x = rhs with the same factorization.
  Eigen::VectorXcd solve_adjoint(const Eigen::VectorXcd& rhs) const;

  double rcond() const { return rcond_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  double rcond_ = 0.0;
};

using LinearMap = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

struct PowerIterationOptions {
  double rel_tol = 1e-10;
  int max_iterations = 20000;
  std::uint64_t seed = 0x9E3779B97F4A7C15ull;
};

/// Largest singular value of M by power iteration on M^H M (random start,
/// relative-change stopping). Throws ConvergenceError with the last
/// estimate and a gap estimate when the iteration cap is hit.
double operator_norm(const LinearMap& apply, const LinearMap& apply_adjoint, int dim,
                     const PowerIterationOptions& opts = {});

double operator_norm(const Eigen::MatrixXcd& m, const PowerIterationOptions& opts = {});

}  // namespace scatbound
