#include "scatbound/designopt.hpp"

#include <cmath>

#include "scatbound/boxopt.hpp"
#include "scatbound/forward.hpp"
#include "scatbound/linalg.hpp"
#include "scatbound/rng.hpp"

namespace scatbound {

namespace {

// sigma and its chi-gradient from one factorization: forward solve for E,
// adjoint solve for Y = G^H (I - G X)^{-H} (X E_inc).
double sigma_and_gradient(const GreensOperator& g, const Eigen::VectorXd& chi,
                          const FieldArray& e_inc, Eigen::VectorXd* grad) {
  const int n = g.grid->n_pixels();
  const int d = components(g.pol);
  const double cell_area = g.grid->cell_area();

  Eigen::VectorXd chi_c(g.dim());
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < d; ++c) chi_c[d * i + c] = chi[i];
  Eigen::MatrixXcd system = -g.mat;
  for (Eigen::Index j = 0; j < system.cols(); ++j) system.col(j) *= chi_c[j];
  system.diagonal().array() += 1.0;
  const LuSolver lu(std::move(system));

  const Eigen::VectorXcd e = lu.solve(e_inc.values);
  const std::complex<double> overlap =
      cell_area * e_inc.values.dot(chi_c.asDiagonal() * e);
  const double sigma = 2.0 * std::imag(overlap);

  if (grad) {
    const Eigen::VectorXcd y =
        g.mat.adjoint() * lu.solve_adjoint(chi_c.asDiagonal() * e_inc.values);
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int c = 0; c < d; ++c) {
        const int idx = d * i + c;
        s += std::imag((std::conj(e_inc.values[idx]) + std::conj(y[idx])) * e[idx]);
      }
      (*grad)[i] = 2.0 * cell_area * s;
    }
  }
  return sigma;
}

}  // namespace

Eigen::VectorXd adjoint_gradient(const GreensOperator& g, const ContrastMap& chi,
                                 const FieldArray& e_inc) {
  Eigen::VectorXd grad(g.grid->n_pixels());
  sigma_and_gradient(g, chi.chi, e_inc, &grad);
  return grad;
}

LocalOptRun local_optimize(const GreensOperator& g, const FieldArray& e_inc,
                           double chi_minus, double chi_plus, int restarts,
                           std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("local_optimize: restarts must be >= 1");
  if (!(chi_minus <= chi_plus))
    throw std::invalid_argument("local_optimize: chi_minus must be <= chi_plus");
  const int n = g.grid->n_pixels();
  const double chi_bar = 0.5 * (chi_plus + chi_minus);

  const auto objective = [&](const Eigen::VectorXd& chi, Eigen::VectorXd* grad) {
    return sigma_and_gradient(g, chi, e_inc, grad);
  };

  LocalOptRun run;
  run.seed = seed;
  double best = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Eigen::VectorXd chi0(n);
    if (r == 0) {
      chi0.setConstant(chi_plus);
    } else if (r == 1) {
      chi0.setConstant(chi_bar);
    } else {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
      for (int i = 0; i < n; ++i) chi0[i] = rng.uniform(chi_minus, chi_plus);
    }
    try {
      const BoxAscentResult res = maximize_box(objective, std::move(chi0), chi_minus, chi_plus);
      run.restart_values.push_back(res.value);
      run.restart_iterations.push_back(res.iterations);
      if (res.value > best) {
        best = res.value;
        run.best_chi = res.x;
      }
    } catch (const SingularSystemError&) {
      ++run.failed_restarts;
    } catch (const SolveError&) {
      ++run.failed_restarts;
    }
  }
  if (run.restart_values.empty())
    throw SolveError("local_optimize: every restart failed (" +
                     std::to_string(run.failed_restarts) + " failures)");
  run.best_sigma = best;
  return run;
}

}  // namespace scatbound
