#pragma once

#include <complex>
#include <vector>

#include "scatbound/geometry.hpp"

namespace scatbound {

struct MieError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MieResult {
  double sigma_scat = 0.0;  // physical 2D scattering width (length)
  int n_harmonics = 0;      // retained harmonics (one-sided count)
  std::vector<std::complex<double>> coefficients;  // a_0 .. a_nmax
  double truncation_estimate = 0.0;
};

/// Cylindrical-harmonic series for plane-wave scattering from a
/// homogeneous circular cylinder of relative permittivity 1 + chi in
/// vacuum. sigma_scat = (4/k) * sum over harmonics |a_n|^2 (symmetric
/// orders counted twice). Requires chi > -1.
MieResult mie_cross_section(double radius, double chi, double lambda0, Polarization pol);

}  // namespace scatbound
