#include "scatbound/alpha.hpp"

#include <cmath>

#include "scatbound/boxopt.hpp"
#include "scatbound/forward.hpp"
#include "scatbound/rng.hpp"

namespace scatbound {

AlphaResult alpha_ub(const GreensOperator& g, double chi_minus, double chi_plus) {
  if (!(chi_minus <= chi_plus))
    throw std::invalid_argument("alpha_ub: chi_minus must be <= chi_plus");
  AlphaResult res;
  const double chi_bar = 0.5 * (chi_plus + chi_minus);
  const double delta_chi = 0.5 * std::abs(chi_plus - chi_minus);
  if (delta_chi == 0.0) return res;  // no design freedom: E = E_ref exactly

  const Eigen::MatrixXcd system =
      Eigen::MatrixXcd::Identity(g.dim(), g.dim()) - chi_bar * g.mat;
  const LuSolver lu(system);
  // K = (I - chi_bar G)^{-1} G applied matrix-free
  const double knorm = operator_norm(
      [&](const Eigen::VectorXcd& x) { return lu.solve(g.mat * x); },
      [&](const Eigen::VectorXcd& x) { return (g.mat.adjoint() * lu.solve_adjoint(x)).eval(); },
      g.dim());

  const double q = delta_chi * knorm;
  if (q < 1.0) {
    res.value = q / (1.0 - q);
  } else {
    res.value = std::numeric_limits<double>::infinity();
    res.divergent = true;
  }
  return res;
}

AlphaResult alpha_loc(const GreensOperator& g, double chi_minus, double chi_plus,
                      const FieldArray& e_inc, const FieldArray& e_ref, int restarts,
                      std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("alpha_loc: restarts must be >= 1");
  const int n = g.grid->n_pixels();
  const double cell_area = g.grid->cell_area();
  const double ref_sq = std::pow(norm(e_ref), 2);
  const int d = components(g.pol);

  // Squared relative deviation ||E(chi) - E_ref||^2 / ||E_ref||^2 (smooth);
  // the square root is taken only on the reported values.
  const auto objective = [&](const Eigen::VectorXd& chi, Eigen::VectorXd* grad) {
    Eigen::VectorXd chi_c(g.dim());
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < d; ++c) chi_c[d * i + c] = chi[i];
    Eigen::MatrixXcd system = -g.mat;
    for (Eigen::Index j = 0; j < system.cols(); ++j) system.col(j) *= chi_c[j];
    system.diagonal().array() += 1.0;
    const LuSolver lu(std::move(system));
    const Eigen::VectorXcd e = lu.solve(e_inc.values);
    const Eigen::VectorXcd diff = e - e_ref.values;
    const double value = cell_area * diff.squaredNorm() / ref_sq;
    if (grad) {
      const Eigen::VectorXcd w = g.mat.adjoint() * lu.solve_adjoint(diff);
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int c = 0; c < d; ++c)
          s += std::real(std::conj(w[d * i + c]) * e[d * i + c]);
        (*grad)[i] = 2.0 * cell_area * s / ref_sq;
      }
    }
    return value;
  };

  AlphaResult res;
  double best = -1.0;
  for (int r = 0; r < restarts; ++r) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    Eigen::VectorXd chi0(n);
    for (int i = 0; i < n; ++i) chi0[i] = rng.uniform(chi_minus, chi_plus);
    try {
      const BoxAscentResult run = maximize_box(objective, std::move(chi0), chi_minus, chi_plus);
      const double alpha_r = std::sqrt(std::max(run.value, 0.0));
      res.restart_values.push_back(alpha_r);
      res.restart_maps.push_back(run.x);
      best = std::max(best, alpha_r);
    } catch (const SingularSystemError&) {
      ++res.failed_restarts;
    } catch (const SolveError&) {
      ++res.failed_restarts;
    }
  }
  if (res.restart_values.empty())
    throw SolveError("alpha_loc: every restart failed (" +
                     std::to_string(res.failed_restarts) + " failures)");
  res.value = best;
  return res;
}

}  // namespace scatbound
