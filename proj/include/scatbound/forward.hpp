#pragma once

#include "scatbound/geometry.hpp"
#include "scatbound/greens.hpp"
#include "scatbound/linalg.hpp"

namespace scatbound {

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScatterSolution {
  FieldArray total_field;          // E
  FieldArray polarization_current; // Phi = chi * E
  double sigma_scat = 0.0;         // 2 Im<E_inc, Phi>, length unit in 2D
  double residual = 0.0;           // ||(I - G chi)E - E_inc|| / ||E_inc||
};

/// Expands a per-pixel real contrast to the per-component diagonal
/// (TM repeats each chi over both components).
Eigen::VectorXd expand_contrast(const GreensOperator& g, const Eigen::VectorXd& chi);

/// Solves (I - G diag(chi)) E = E_inc by dense LU with one refinement
/// step. Throws SingularSystemError near resonance (condition > 1e14)
/// and SolveError if the residual exceeds 1e-10.
ScatterSolution solve_vie(const GreensOperator& g, const ContrastMap& chi,
                          const FieldArray& e_inc);

/// sigma_scat = 2 Im<E_inc, Phi>. Reported values are sigma / lambda0;
/// the physical 2D cross-section is (k/2) times this (single calibration
/// factor, recorded in run metadata).
double cross_section(const FieldArray& e_inc, const FieldArray& phi);

/// E_ref = (I - chi_bar G)^{-1} E_inc, the uniform-midpoint-contrast solve.
FieldArray reference_field(const GreensOperator& g, double chi_bar, const FieldArray& e_inc);

}  // namespace scatbound
