#include "scatbound/mie.hpp"

#include <cmath>

#include "scatbound/bessel.hpp"

namespace scatbound {

namespace {

double jprime(int n, double x) {
  return (n == 0) ? -bessel::jn(1, x) : bessel::jn(n - 1, x) - n / x * bessel::jn(n, x);
}

std::complex<double> hprime(int n, double x) {
  return (n == 0) ? -bessel::hankel1(1, x)
                  : bessel::hankel1(n - 1, x) - n / x * bessel::hankel1(n, x);
}

// Scattering coefficient of harmonic n from boundary matching at r = a,
// in determinant form (no interior log-derivative pole). TE (E along z):
// E_z and dE_z/dr continuous. TM (H along z): H_z and (1/eps) dH_z/dr
// continuous; eps = m^2.
std::complex<double> harmonic_coefficient(int n, double x, double m, Polarization pol) {
  const double jx = bessel::jn(n, x);
  const double jpx = jprime(n, x);
  const double jm = bessel::jn(n, m * x);
  const double jpm = jprime(n, m * x);
  const std::complex<double> h = bessel::hankel1(n, x);
  const std::complex<double> hp = hprime(n, x);
  const double w = (pol == Polarization::TE) ? m * jpm : jpm / m;
  return (w * jx - jm * jpx) / (jm * hp - w * h);
}

}  // namespace

MieResult mie_cross_section(double radius, double chi, double lambda0, Polarization pol) {
  if (!(radius > 0) || !(lambda0 > 0))
    throw std::invalid_argument("mie_cross_section: radius and lambda0 must be > 0");
  if (!(chi > -1.0))
    throw MieError("mie_cross_section: requires chi > -1 (positive permittivity)");

  const double k = 2.0 * kPi / lambda0;
  const double x = k * radius;
  const double m = std::sqrt(1.0 + chi);

  MieResult res;
  if (chi == 0.0) {  // no contrast: every coefficient vanishes identically
    res.n_harmonics = 1;
    res.coefficients.assign(1, {0.0, 0.0});
    return res;
  }

  double sum = 0.0;
  const int n_cap = static_cast<int>(std::ceil((1.0 + m) * x)) + 40;
  double last_rel = 1.0;
  for (int n = 0; n <= n_cap; ++n) {
    const std::complex<double> an = harmonic_coefficient(n, x, m, pol);
    if (!std::isfinite(an.real()) || !std::isfinite(an.imag()))
      throw MieError("mie_cross_section: non-finite harmonic coefficient at n = " +
                     std::to_string(n));
    res.coefficients.push_back(an);
    const double contrib = (n == 0 ? 1.0 : 2.0) * std::norm(an);
    sum += contrib;
    res.n_harmonics = n + 1;
    if (sum > 0.0) {
      last_rel = contrib / sum;
      if (n > static_cast<int>(x) + 2 && last_rel < 1e-12) break;
    }
  }
  if (last_rel >= 1e-12 && sum > 0.0)
    throw MieError("mie_cross_section: series did not reach truncation tolerance");
  res.truncation_estimate = last_rel;
  res.sigma_scat = 4.0 / k * sum;
  return res;
}

}  // namespace scatbound
