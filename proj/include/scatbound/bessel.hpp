#pragma once

#include <complex>

// Cylinder Bessel functions J_n, Y_n and the outgoing Hankel function
// H_n^(1) = J_n + i Y_n for integer order and real positive argument.
//
// Small arguments use the ascending power series (accumulated in long
// double), large arguments the Hankel asymptotic expansion; the two
// branches hand over at kSeriesAsymptoticSwitch where they agree to
// better than 1e-10 (checked by the unit tests).

namespace scatbound::bessel {

inline constexpr double kSeriesAsymptoticSwitch = 12.0;

double j0(double x);
double j1(double x);
double y0(double x);  // x > 0
double y1(double x);  // x > 0

/// J_n for n >= 0, x >= 0. Upward recurrence when x >= n, Miller's
/// downward recurrence otherwise.
double jn(int n, double x);

/// Y_n for n >= 0, x > 0 (upward recurrence is stable).
double yn(int n, double x);

std::complex<double> hankel1(int n, double x);

}  // namespace scatbound::bessel
