#pragma once

#include <Eigen/Dense>

#include "scatbound/geometry.hpp"

namespace scatbound {

/// Dense discretization of the background Green's operator restricted to
/// the design region: maps a polarization current to the scattered field
/// on the same pixels. The k^2 factor is folded into the operator so that
/// the contrast chi is the dimensionless permittivity deviation.
struct GreensOperator {
  Polarization pol = Polarization::TE;
  GridPtr grid;
  Eigen::MatrixXcd mat;  // (N*d) x (N*d), complex-symmetric

  int dim() const { return static_cast<int>(mat.rows()); }
};

/// Scalar TE operator: pulse basis, delta testing, with the square cell
/// replaced by the equal-area disc (closed form in Bessel functions).
/// Off-diagonal: (i pi k a / 2) J1(ka) H0^(1)(k r_ij); diagonal:
/// (i pi k a / 2) H1^(1)(ka) - 1, with a = dx/sqrt(pi).
GreensOperator assemble_te(GridPtr grid);

/// Dyadic TM operator: 2x2 block per pixel pair realizing
/// (k^2 I + grad grad) g integrated over the equal-area source disc.
/// The diagonal block carries the -I/2 depolarization of a circular
/// exclusion plus the regular part of the self integral. Component
/// ordering is (x1, y1, x2, y2, ...).
GreensOperator assemble_tm(GridPtr grid);

/// Unit-amplitude plane wave sampled on the grid. TE: exp(i k d.x);
/// TM: the same phase times the in-plane unit vector orthogonal to d
/// (d rotated 90 degrees counterclockwise).
FieldArray plane_wave(GridPtr grid, Polarization pol, const Eigen::Vector2d& direction);

}  // namespace scatbound
