#pragma once

#include <Eigen/Dense>
#include <optional>

#include "scatbound/geometry.hpp"
#include "scatbound/greens.hpp"

namespace scatbound {

/// Constant pinning S - G^H V to a multiple of i E_inc (the conjugate of
/// the linear cross-section objective collapses to a point constraint).
/// kPlusI is the calibrated production convention; the others exist for
/// the calibration suite, which falsifies them against weak duality.
enum class PairingConvention { kPlusI, kMinusI, kMinus2I };

/// Norm weighting the field-deviation ball ||E - E_ref|| <= alpha * w.
/// kRefField (w = ||E_ref||) matches the deviation-ratio definition used
/// by the alpha estimators and is the calibrated production convention.
enum class AlphaBallNorm { kRefField, kIncField };

const char* to_string(PairingConvention c);
const char* to_string(AlphaBallNorm n);
PairingConvention pairing_from_string(const std::string& s);
AlphaBallNorm ball_norm_from_string(const std::string& s);

/// Objective selector. Only the linear cross-section objective
/// f[Phi] = -2 Im<E_inc, Phi> is implemented; the enum is the extension
/// point for other convex objectives.
enum class ObjectiveKind { kNegScatteringCrossSection, kGeneralConvex };

struct DualOptions {
  int max_iterations = 20000;
  int stages = 6;              // softmax temperature halvings
  double stage_rel_tol = 1e-9;
  double unconverged_tol = 1e-4;  // relative improvement over last 10% of iterations
  double lambda_min_scale = 1e-12;  // lambda_min = scale * ||E_inc||^2
  PairingConvention pairing = PairingConvention::kPlusI;
  AlphaBallNorm ball_norm = AlphaBallNorm::kRefField;
};

/// Feasible dual point plus the certified bound value. Any feasible point
/// is a valid bound; optimality only affects tightness. Carries enough
/// problem identification to re-verify from scratch.
struct DualCertificate {
  Eigen::VectorXcd V;
  Eigen::VectorXcd S;
  Eigen::VectorXd beta;
  double lambda = 0.0;
  double value = 0.0;  // certified lower bound d on the objective f
  double alpha = 0.0;
  PairingConvention pairing = PairingConvention::kPlusI;
  AlphaBallNorm ball_norm = AlphaBallNorm::kRefField;
  bool unbounded = false;  // alpha = infinity sentinel: no finite bound
  bool converged = true;
  int iterations = 0;
  double feasibility_margin = 0.0;  // min_x min_s (beta_x - q_s(x))

  Polarization pol = Polarization::TE;
  double lambda0 = 0.0, radius = 0.0, dx = 0.0;
  double chi_minus = 0.0, chi_plus = 0.0;

  double sigma_bound() const { return -value; }  // upper bound on sigma_scat
};

struct CertificateCheck {
  bool pass = false;
  double pin_residual = 0.0;        // ||S - (G^H V + c)|| relative
  double feasibility_margin = 0.0;  // min (beta - q); must be >= -1e-10
  double objective_error = 0.0;     // |d_recomputed - d| relative
  bool lambda_ok = false;
};

/// S determined by the Fenchel constraint of the linear cross-section
/// objective: S = G^H V + c with c the convention multiple of i E_inc.
/// Throws std::invalid_argument for unsupported (nonlinear) objectives.
FieldArray fenchel_eliminate(const FieldArray& e_inc, const FieldArray& v,
                             const GreensOperator& g, PairingConvention convention,
                             ObjectiveKind objective = ObjectiveKind::kNegScatteringCrossSection);

/// Evaluates the dual objective exactly at (V, lambda), beta set to its
/// pointwise minimum feasible value (equality at the worse endpoint). The
/// result is a valid lower bound for ANY input; feasibility, not
/// optimality, certifies it. Throws if lambda < lambda_min.
std::pair<double, DualCertificate> dual_objective(
    const Eigen::VectorXcd& v, double lambda, const GreensOperator& g,
    const FieldArray& e_inc, const FieldArray& e_ref, double chi_minus,
    double chi_plus, double alpha, const DualOptions& options = {});

/// First-order concave maximization over (V, log lambda): softmax-smoothed
/// endpoint max with a decreasing temperature schedule, then one exact
/// (unsmoothed) evaluation at the final iterate. alpha must be finite;
/// callers short-circuit alpha = infinity via unbounded_certificate().
DualCertificate solve_dual(const GreensOperator& g, const FieldArray& e_inc,
                           const FieldArray& e_ref, double chi_minus, double chi_plus,
                           double alpha, const DualOptions& options = {});

DualCertificate unbounded_certificate(const GreensOperator& g, double chi_minus,
                                      double chi_plus, const DualOptions& options = {});

/// Independent re-verification: S pin, beta feasibility (slack 1e-10),
/// objective recomputation (1e-12 relative), lambda >= lambda_min.
CertificateCheck verify_certificate(const DualCertificate& cert, const GreensOperator& g,
                                    const FieldArray& e_inc, const FieldArray& e_ref);

}  // namespace scatbound
