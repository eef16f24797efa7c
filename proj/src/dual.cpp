#include "scatbound/dual.hpp"

#include <algorithm>
#include <cmath>

namespace scatbound {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

double pairing_multiple(PairingConvention c) {
  switch (c) {
    case PairingConvention::kPlusI: return 1.0;
    case PairingConvention::kMinusI: return -1.0;
    case PairingConvention::kMinus2I: return -2.0;
  }
  throw std::logic_error("unknown pairing convention");
}

// Shared problem data for one dual solve.
struct DualProblem {
  const GreensOperator* g;
  Eigen::VectorXcd e_inc, e_ref, c;  // c = multiple * i * E_inc
  Eigen::VectorXcd ref_minus_inc;
  double cell_area;
  double chi_minus, chi_plus;
  double alpha, ball_sq;  // ball_sq = alpha^2 * w^2
  double lambda_min;
  int n_pixels, d;

  // per-pixel |u|^2 summed over components
  Eigen::VectorXd pixel_sq(const Eigen::VectorXcd& u) const {
    Eigen::VectorXd out(n_pixels);
    for (int i = 0; i < n_pixels; ++i) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += std::norm(u[d * i + k]);
      out[i] = s;
    }
    return out;
  }

  // per-pixel Re(S^* . E_ref) summed over components
  Eigen::VectorXd pixel_redot(const Eigen::VectorXcd& s_field) const {
    Eigen::VectorXd out(n_pixels);
    for (int i = 0; i < n_pixels; ++i) {
      double r = 0.0;
      for (int k = 0; k < d; ++k)
        r += std::real(std::conj(s_field[d * i + k]) * e_ref[d * i + k]);
      out[i] = r;
    }
    return out;
  }

  Eigen::VectorXcd expand_weights(const Eigen::VectorXd& w,
                                  const Eigen::VectorXcd& u) const {
    Eigen::VectorXcd out(u.size());
    for (int i = 0; i < n_pixels; ++i)
      for (int k = 0; k < d; ++k) out[d * i + k] = w[i] * u[d * i + k];
    return out;
  }
};

DualProblem make_problem(const GreensOperator& g, const FieldArray& e_inc,
                         const FieldArray& e_ref, double chi_minus, double chi_plus,
                         double alpha, const DualOptions& options) {
  if (!(chi_minus <= chi_plus))
    throw std::invalid_argument("dual: chi_minus must be <= chi_plus");
  DualProblem p;
  p.g = &g;
  p.e_inc = e_inc.values;
  p.e_ref = e_ref.values;
  p.c = pairing_multiple(options.pairing) * kI * e_inc.values;
  p.ref_minus_inc = e_ref.values - e_inc.values;
  p.cell_area = g.grid->cell_area();
  p.chi_minus = chi_minus;
  p.chi_plus = chi_plus;
  p.alpha = alpha;
  const double w_sq = (options.ball_norm == AlphaBallNorm::kRefField)
                          ? p.cell_area * p.e_ref.squaredNorm()
                          : p.cell_area * p.e_inc.squaredNorm();
  p.ball_sq = alpha * alpha * w_sq;
  p.lambda_min = options.lambda_min_scale * p.cell_area * p.e_inc.squaredNorm();
  p.n_pixels = g.grid->n_pixels();
  p.d = components(g.pol);
  return p;
}

// Endpoint terms q_s(x) = |V - s S|^2_x / lambda + 2 s Re(S^*.E_ref)_x.
struct EndpointTerms {
  Eigen::VectorXcd u_minus, u_plus;   // V - s S
  Eigen::VectorXd q_minus, q_plus;    // per pixel
  Eigen::VectorXd redot;              // Re(S^*.E_ref) per pixel
};

EndpointTerms endpoint_terms(const DualProblem& p, const Eigen::VectorXcd& v,
                             const Eigen::VectorXcd& s_field, double lambda) {
  EndpointTerms t;
  t.u_minus = v - p.chi_minus * s_field;
  t.u_plus = v - p.chi_plus * s_field;
  t.redot = p.pixel_redot(s_field);
  t.q_minus = p.pixel_sq(t.u_minus) / lambda + 2.0 * p.chi_minus * t.redot;
  t.q_plus = p.pixel_sq(t.u_plus) / lambda + 2.0 * p.chi_plus * t.redot;
  return t;
}

// Exact objective: 2 Re<V, E_ref - E_inc> - dA sum max(q-, q+) - lambda ball.
double exact_value(const DualProblem& p, const Eigen::VectorXcd& v,
                   const EndpointTerms& t, double lambda, Eigen::VectorXd* beta_out) {
  const double lead = 2.0 * p.cell_area * std::real(v.dot(p.ref_minus_inc));
  double beta_sum = 0.0;
  if (beta_out) beta_out->resize(p.n_pixels);
  for (int i = 0; i < p.n_pixels; ++i) {
    const double b = std::max(t.q_minus[i], t.q_plus[i]);
    if (beta_out) (*beta_out)[i] = b;
    beta_sum += b;
  }
  return lead - p.cell_area * beta_sum - lambda * p.ball_sq;
}

// Smoothed objective and its gradient in (Re V, Im V, tau = log lambda).
double smoothed_value_grad(const DualProblem& p, const Eigen::VectorXcd& v,
                           double lambda, double temperature,
                           Eigen::VectorXcd* grad_v, double* grad_t) {
  const Eigen::MatrixXcd& gm = p.g->mat;
  const Eigen::VectorXcd s_field = gm.adjoint() * v + p.c;
  const EndpointTerms t = endpoint_terms(p, v, s_field, lambda);

  const double lead = 2.0 * p.cell_area * std::real(v.dot(p.ref_minus_inc));
  double beta_sum = 0.0;
  Eigen::VectorXd w_minus(p.n_pixels), w_plus(p.n_pixels);
  for (int i = 0; i < p.n_pixels; ++i) {
    const double m = std::max(t.q_minus[i], t.q_plus[i]);
    const double em = std::exp((t.q_minus[i] - m) / temperature);
    const double ep = std::exp((t.q_plus[i] - m) / temperature);
    beta_sum += m + temperature * std::log(em + ep);
    w_minus[i] = em / (em + ep);
    w_plus[i] = ep / (em + ep);
  }
  const double value = lead - p.cell_area * beta_sum - lambda * p.ball_sq;

  if (grad_v) {
    const Eigen::VectorXcd wu_minus = p.expand_weights(w_minus, t.u_minus);
    const Eigen::VectorXcd wu_plus = p.expand_weights(w_plus, t.u_plus);
    const Eigen::VectorXcd we_minus = p.expand_weights(w_minus, p.e_ref);
    const Eigen::VectorXcd we_plus = p.expand_weights(w_plus, p.e_ref);
    const Eigen::VectorXcd z = p.chi_minus * (wu_minus / lambda - we_minus) +
                               p.chi_plus * (wu_plus / lambda - we_plus);
    *grad_v = p.cell_area *
              (p.ref_minus_inc - (wu_minus + wu_plus) / lambda + gm * z);
  }
  if (grad_t) {
    double usq = 0.0;
    for (int i = 0; i < p.n_pixels; ++i) {
      double sm = 0.0, sp = 0.0;
      for (int k = 0; k < p.d; ++k) {
        sm += std::norm(t.u_minus[p.d * i + k]);
        sp += std::norm(t.u_plus[p.d * i + k]);
      }
      usq += w_minus[i] * sm + w_plus[i] * sp;
    }
    *grad_t = -lambda * p.ball_sq + p.cell_area * usq / lambda;
  }
  return value;
}

DualCertificate certificate_at(const DualProblem& p, const GreensOperator& g,
                               const Eigen::VectorXcd& v, double lambda,
                               const DualOptions& options) {
  const Eigen::VectorXcd s_field = g.mat.adjoint() * v + p.c;
  const EndpointTerms t = endpoint_terms(p, v, s_field, lambda);
  DualCertificate cert;
  cert.V = v;
  cert.S = s_field;
  cert.value = exact_value(p, v, t, lambda, &cert.beta);
  cert.lambda = lambda;
  cert.alpha = p.alpha;
  cert.pairing = options.pairing;
  cert.ball_norm = options.ball_norm;
  cert.feasibility_margin = 0.0;  // beta sits at equality by construction
  cert.pol = g.pol;
  cert.lambda0 = g.grid->lambda0();
  cert.radius = g.grid->radius();
  cert.dx = g.grid->dx();
  cert.chi_minus = p.chi_minus;
  cert.chi_plus = p.chi_plus;
  return cert;
}

}  // namespace

const char* to_string(PairingConvention c) {
  switch (c) {
    case PairingConvention::kPlusI: return "plus_i";
    case PairingConvention::kMinusI: return "minus_i";
    case PairingConvention::kMinus2I: return "minus_2i";
  }
  return "?";
}

const char* to_string(AlphaBallNorm n) {
  return n == AlphaBallNorm::kRefField ? "ref" : "inc";
}

PairingConvention pairing_from_string(const std::string& s) {
  if (s == "plus_i") return PairingConvention::kPlusI;
  if (s == "minus_i") return PairingConvention::kMinusI;
  if (s == "minus_2i") return PairingConvention::kMinus2I;
  throw std::invalid_argument("unknown pairing convention: " + s);
}

AlphaBallNorm ball_norm_from_string(const std::string& s) {
  if (s == "ref") return AlphaBallNorm::kRefField;
  if (s == "inc") return AlphaBallNorm::kIncField;
  throw std::invalid_argument("unknown alpha ball norm: " + s);
}

FieldArray fenchel_eliminate(const FieldArray& e_inc, const FieldArray& v,
                             const GreensOperator& g, PairingConvention convention,
                             ObjectiveKind objective) {
  if (objective != ObjectiveKind::kNegScatteringCrossSection)
    throw std::invalid_argument(
        "fenchel_eliminate: only the linear cross-section objective is supported");
  if (!e_inc.compatible_with(v))
    throw std::invalid_argument("fenchel_eliminate: mismatched fields");
  FieldArray s = e_inc;
  s.values = g.mat.adjoint() * v.values + pairing_multiple(convention) * kI * e_inc.values;
  return s;
}

std::pair<double, DualCertificate> dual_objective(
    const Eigen::VectorXcd& v, double lambda, const GreensOperator& g,
    const FieldArray& e_inc, const FieldArray& e_ref, double chi_minus,
    double chi_plus, double alpha, const DualOptions& options) {
  const DualProblem p = make_problem(g, e_inc, e_ref, chi_minus, chi_plus, alpha, options);
  if (!(lambda >= p.lambda_min))
    throw std::invalid_argument("dual_objective: lambda below lambda_min");
  DualCertificate cert = certificate_at(p, g, v, lambda, options);
  return {cert.value, cert};
}

DualCertificate solve_dual(const GreensOperator& g, const FieldArray& e_inc,
                           const FieldArray& e_ref, double chi_minus, double chi_plus,
                           double alpha, const DualOptions& options) {
  if (!(alpha >= 0.0) || std::isinf(alpha))
    throw std::invalid_argument("solve_dual: alpha must be finite and >= 0");
  const DualProblem p = make_problem(g, e_inc, e_ref, chi_minus, chi_plus, alpha, options);

  const int dim = static_cast<int>(p.e_inc.size());
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);

  // lambda scale: balance the quadratic-over-lambda term against the ball
  // term when possible, otherwise start well above lambda_min.
  const Eigen::VectorXcd s0 = p.c;  // S at V = 0
  const double smax = std::max(std::abs(chi_minus), std::abs(chi_plus));
  const double p0 = p.cell_area * smax * smax * s0.squaredNorm();
  const double t_min = std::log(p.lambda_min);
  const double t_max = t_min + 690.0;  // lambda range cap, ~3e299 x lambda_min
  double t = (p.ball_sq > 0 && p0 > 0) ? 0.5 * std::log(p0 / p.ball_sq)
                                       : t_min + 0.5 * (t_max - t_min);
  t = std::clamp(t, t_min + 1.0, t_max - 1.0);

  // Initial softmax temperature: median per-pixel endpoint gap.
  double temperature;
  {
    const Eigen::VectorXcd s_field = g.mat.adjoint() * v + p.c;
    const EndpointTerms terms = endpoint_terms(p, v, s_field, std::exp(t));
    Eigen::VectorXd gaps = (terms.q_plus - terms.q_minus).cwiseAbs();
    std::sort(gaps.data(), gaps.data() + gaps.size());
    temperature = gaps[gaps.size() / 2];
    if (!(temperature > 0)) temperature = std::max(p0, 1.0);
  }

  const int stage_budget = std::max(options.max_iterations / std::max(options.stages, 1), 1);
  int total_iterations = 0;
  std::vector<double> history;
  history.reserve(static_cast<size_t>(options.max_iterations));

  DualCertificate best = certificate_at(p, g, v, std::exp(t), options);

  Eigen::VectorXcd grad_v(dim), prev_grad_v(dim);
  double grad_t = 0.0, prev_grad_t = 0.0;
  Eigen::VectorXcd prev_v(dim);
  double prev_t = 0.0;

  for (int stage = 0; stage < options.stages; ++stage) {
    double value = smoothed_value_grad(p, v, std::exp(t), temperature, &grad_v, &grad_t);
    double step = 1.0 / std::max(std::sqrt(grad_v.squaredNorm() + grad_t * grad_t), 1e-12);
    bool have_prev = false;

    for (int it = 0; it < stage_budget && total_iterations < options.max_iterations; ++it) {
      ++total_iterations;
      // Barzilai-Borwein step guess from the previous accepted move.
      if (have_prev) {
        const Eigen::VectorXcd dv = v - prev_v;
        const double dt = t - prev_t;
        const Eigen::VectorXcd dg = grad_v - prev_grad_v;
        const double dgt = grad_t - prev_grad_t;
        const double num = dv.squaredNorm() + dt * dt;
        const double den = std::abs(std::real(dv.dot(dg)) + dt * dgt);
        if (den > 1e-300 && num > 0) step = num / den;
      }
      prev_v = v;
      prev_t = t;
      prev_grad_v = grad_v;
      prev_grad_t = grad_t;

      // Backtracking ascent (monotone on the smoothed objective).
      double accepted = value;
      bool ok = false;
      for (int bt = 0; bt < 60; ++bt) {
        const Eigen::VectorXcd v_new = v + 2.0 * step * grad_v;  // d/dRe,Im = 2*Wirtinger
        const double t_new = std::clamp(t + step * grad_t, t_min, t_max);
        const double trial =
            smoothed_value_grad(p, v_new, std::exp(t_new), temperature, nullptr, nullptr);
        const double gain = 4.0 * step * grad_v.squaredNorm() +
                            (t_new - t) * grad_t;  // <grad, move> in real coords
        if (trial >= value + 1e-4 * gain) {
          v = v_new;
          t = t_new;
          accepted = trial;
          ok = true;
          break;
        }
        step *= 0.25;
      }
      if (!ok) break;  // cannot improve at this temperature
      const double improvement = accepted - value;
      value = smoothed_value_grad(p, v, std::exp(t), temperature, &grad_v, &grad_t);
      history.push_back(value);
      have_prev = true;
      if (std::abs(improvement) <= options.stage_rel_tol * std::max(std::abs(value), 1e-30))
        break;
    }

    // Exact certificate at the stage end; keep the best exact value seen.
    DualCertificate cand = certificate_at(p, g, v, std::exp(t), options);
    if (cand.value > best.value) best = cand;
    temperature *= 0.5;
  }

  best.iterations = total_iterations;
  best.converged = true;
  if (total_iterations >= options.max_iterations && history.size() >= 10) {
    const size_t tail = history.size() / 10;
    const double before = history[history.size() - 1 - tail];
    const double after = history.back();
    const double rel = std::abs(after - before) / std::max(std::abs(after), 1e-30);
    if (rel > options.unconverged_tol) best.converged = false;
  }
  return best;
}

DualCertificate unbounded_certificate(const GreensOperator& g, double chi_minus,
                                      double chi_plus, const DualOptions& options) {
  DualCertificate cert;
  cert.unbounded = true;
  cert.value = -std::numeric_limits<double>::infinity();
  cert.alpha = std::numeric_limits<double>::infinity();
  cert.pairing = options.pairing;
  cert.ball_norm = options.ball_norm;
  cert.pol = g.pol;
  cert.lambda0 = g.grid->lambda0();
  cert.radius = g.grid->radius();
  cert.dx = g.grid->dx();
  cert.chi_minus = chi_minus;
  cert.chi_plus = chi_plus;
  return cert;
}

CertificateCheck verify_certificate(const DualCertificate& cert, const GreensOperator& g,
                                    const FieldArray& e_inc, const FieldArray& e_ref) {
  CertificateCheck check;
  if (cert.unbounded) {  // sentinel: nothing to verify numerically
    check.pass = true;
    check.lambda_ok = true;
    return check;
  }
  DualOptions options;
  options.pairing = cert.pairing;
  options.ball_norm = cert.ball_norm;
  const DualProblem p =
      make_problem(g, e_inc, e_ref, cert.chi_minus, cert.chi_plus, cert.alpha, options);

  // S pin
  const Eigen::VectorXcd s_expected = g.mat.adjoint() * cert.V + p.c;
  check.pin_residual =
      (cert.S - s_expected).norm() / std::max(s_expected.norm(), 1e-300);

  // beta feasibility against freshly recomputed endpoint terms
  const EndpointTerms t = endpoint_terms(p, cert.V, cert.S, cert.lambda);
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < p.n_pixels; ++i) {
    margin = std::min(margin, cert.beta[i] - t.q_minus[i]);
    margin = std::min(margin, cert.beta[i] - t.q_plus[i]);
  }
  check.feasibility_margin = margin;

  // objective recomputation from the stored pieces
  const double lead = 2.0 * p.cell_area * std::real(cert.V.dot(p.ref_minus_inc));
  const double recomputed =
      lead - p.cell_area * cert.beta.sum() - cert.lambda * p.ball_sq;
  check.objective_error =
      std::abs(recomputed - cert.value) / std::max(std::abs(cert.value), 1.0);

  check.lambda_ok = cert.lambda >= p.lambda_min * (1.0 - 1e-12);
  check.pass = check.pin_residual <= 1e-10 && check.feasibility_margin >= -1e-10 &&
               check.objective_error <= 1e-12 && check.lambda_ok;
  return check;
}

}  // namespace scatbound
