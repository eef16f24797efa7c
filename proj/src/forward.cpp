#include "scatbound/forward.hpp"

namespace scatbound {

Eigen::VectorXd expand_contrast(const GreensOperator& g, const Eigen::VectorXd& chi) {
  const int d = components(g.pol);
  if (chi.size() * d != g.dim())
    throw std::invalid_argument("expand_contrast: contrast size does not match operator");
  if (d == 1) return chi;
  Eigen::VectorXd out(g.dim());
  for (Eigen::Index i = 0; i < chi.size(); ++i) {
    out[2 * i] = chi[i];
    out[2 * i + 1] = chi[i];
  }
  return out;
}

ScatterSolution solve_vie(const GreensOperator& g, const ContrastMap& chi,
                          const FieldArray& e_inc) {
  if (e_inc.pol != g.pol || !e_inc.grid->same_as(*g.grid))
    throw std::invalid_argument("solve_vie: incident field does not match operator");
  const Eigen::VectorXd chi_c = expand_contrast(g, chi.chi);
  Eigen::MatrixXcd system = -g.mat;
  // A = I - G diag(chi): scale columns of G by chi
  for (Eigen::Index j = 0; j < system.cols(); ++j) system.col(j) *= chi_c[j];
  system.diagonal().array() += 1.0;

  const LuSolver lu(std::move(system));
  ScatterSolution sol;
  sol.total_field = e_inc;
  sol.total_field.values = lu.solve(e_inc.values);
  sol.polarization_current = sol.total_field;
  sol.polarization_current.values.array() *= chi_c.array();

  const double rhs_norm = e_inc.values.norm();
  sol.residual =
      (lu.matrix() * sol.total_field.values - e_inc.values).norm() / rhs_norm;
  if (!(sol.residual <= 1e-10))
    throw SolveError("solve_vie: residual " + std::to_string(sol.residual) +
                     " exceeds tolerance");
  sol.sigma_scat = cross_section(e_inc, sol.polarization_current);
  return sol;
}

double cross_section(const FieldArray& e_inc, const FieldArray& phi) {
  return 2.0 * std::imag(inner(e_inc, phi));
}

FieldArray reference_field(const GreensOperator& g, double chi_bar, const FieldArray& e_inc) {
  Eigen::MatrixXcd system = Eigen::MatrixXcd::Identity(g.dim(), g.dim()) - chi_bar * g.mat;
  const LuSolver lu(std::move(system));
  FieldArray ref = e_inc;
  ref.values = lu.solve(e_inc.values);
  return ref;
}

}  // namespace scatbound
