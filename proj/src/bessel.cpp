#include "scatbound/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace scatbound::bessel {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kPi = 3.14159265358979323846264338327950288;

// Ascending series, A&S 9.1.10 / 9.1.11. long double keeps the
// alternating-series cancellation below ~1e-15 up to the switch point.
long double j0_series(long double x) {
  const long double t = x * x / 4.0L;
  long double term = 1.0L, sum = 1.0L;
  for (int m = 1; m < 80; ++m) {
    term *= -t / (static_cast<long double>(m) * m);
    sum += term;
    if (std::fabs(static_cast<double>(term)) < 1e-20) break;
  }
  return sum;
}

long double j1_series(long double x) {
  const long double t = x * x / 4.0L;
  long double term = 1.0L, sum = 1.0L;
  for (int m = 1; m < 80; ++m) {
    term *= -t / (static_cast<long double>(m) * (m + 1));
    sum += term;
    if (std::fabs(static_cast<double>(term)) < 1e-20) break;
  }
  return (x / 2.0L) * sum;
}

long double y0_series(long double x) {
  const long double t = x * x / 4.0L;
  long double term = 1.0L;  // t^m / (m!)^2
  long double hm = 0.0L;    // harmonic number H_m
  long double sum = 0.0L;
  for (int m = 1; m < 80; ++m) {
    term *= t / (static_cast<long double>(m) * m);
    hm += 1.0L / m;
    const long double contrib = (m % 2 == 1 ? hm : -hm) * term;
    sum += contrib;
    if (std::fabs(static_cast<double>(contrib)) < 1e-20) break;
  }
  const long double lg = std::log(x / 2.0L) + kEulerGamma;
  return (2.0L / kPi) * (lg * j0_series(x) + sum);
}

long double y1_series(long double x) {
  // A&S 9.1.11 with n = 1; psi(1) = -gamma, psi(k+1) = -gamma + H_k.
  const long double t = x * x / 4.0L;
  long double term = 1.0L;  // (-t)^k / (k! (k+1)!)
  long double hk = 0.0L, hk1 = 1.0L;
  long double sum = term * (hk + hk1 - 2.0L * kEulerGamma);
  for (int k = 1; k < 80; ++k) {
    term *= -t / (static_cast<long double>(k) * (k + 1));
    hk += 1.0L / k;
    hk1 += 1.0L / (k + 1);
    const long double contrib = term * (hk + hk1 - 2.0L * kEulerGamma);
    sum += contrib;
    if (std::fabs(static_cast<double>(contrib)) < 1e-20) break;
  }
  return (2.0L / kPi) * std::log(x / 2.0L) * j1_series(x) - 2.0L / (kPi * x) -
         (x / (2.0L * kPi)) * sum;
}

// Hankel asymptotic expansion, A&S 9.2.5-9.2.10.
struct PQ {
  double p, q;
};

PQ asymptotic_pq(int n, double x) {
  const double mu = 4.0 * n * n;
  long double c = 1.0L;
  long double p = 1.0L, q = 0.0L;
  long double prev = 1.0L;
  for (int k = 1; k < 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    c *= (mu - odd * odd) / (8.0 * k * x);
    if (std::fabs(static_cast<double>(c)) > std::fabs(static_cast<double>(prev)))
      break;  // asymptotic series started diverging
    prev = c;
    switch (k % 4) {
      case 1: q += c; break;
      case 2: p -= c; break;
      case 3: q -= c; break;
      case 0: p += c; break;
    }
    if (std::fabs(static_cast<double>(c)) < 1e-18) break;
  }
  return {static_cast<double>(p), static_cast<double>(q)};
}

double j_asymptotic(int n, double x) {
  const auto [p, q] = asymptotic_pq(n, x);
  const double chi = x - (2.0 * n + 1.0) * kPi / 4.0;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double y_asymptotic(int n, double x) {
  const auto [p, q] = asymptotic_pq(n, x);
  const double chi = x - (2.0 * n + 1.0) * kPi / 4.0;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

}  // namespace

double j0(double x) {
  x = std::fabs(x);
  if (x < kSeriesAsymptoticSwitch) return static_cast<double>(j0_series(x));
  return j_asymptotic(0, x);
}

double j1(double x) {
  const double s = x < 0 ? -1.0 : 1.0;
  x = std::fabs(x);
  if (x < kSeriesAsymptoticSwitch) return s * static_cast<double>(j1_series(x));
  return s * j_asymptotic(1, x);
}

double y0(double x) {
  if (!(x > 0)) throw std::domain_error("bessel::y0 requires x > 0");
  if (x < kSeriesAsymptoticSwitch) return static_cast<double>(y0_series(x));
  return y_asymptotic(0, x);
}

double y1(double x) {
  if (!(x > 0)) throw std::domain_error("bessel::y1 requires x > 0");
  if (x < kSeriesAsymptoticSwitch) return static_cast<double>(y1_series(x));
  return y_asymptotic(1, x);
}

double jn(int n, double x) {
  if (n < 0) throw std::domain_error("bessel::jn requires n >= 0");
  if (n == 0) return j0(x);
  if (n == 1) return j1(x);
  if (x == 0.0) return 0.0;
  if (x >= n) {
    // upward recurrence is stable for x >= n
    double jm = j0(x), jc = j1(x);
    for (int k = 1; k < n; ++k) {
      const double jn1 = (2.0 * k / x) * jc - jm;
      jm = jc;
      jc = jn1;
    }
    return jc;
  }
  // Miller's downward recurrence, normalized by J0 + 2*sum J_{2k} = 1.
  const int start = n + static_cast<int>(std::sqrt(40.0 * n)) + 20;
  double fp = 0.0, fc = 1e-30;
  double result = 0.0, norm = 0.0;
  for (int k = start; k >= 0; --k) {
    const double fm = (2.0 * (k + 1) / x) * fc - fp;
    fp = fc;
    fc = fm;
    if (k == n) result = fc;
    if (k % 2 == 0) norm += (k == 0 ? 1.0 : 2.0) * fc;
    if (std::fabs(fc) > 1e250) {  // rescale to avoid overflow
      fc *= 1e-250;
      fp *= 1e-250;
      result *= 1e-250;
      norm *= 1e-250;
    }
  }
  return result / norm;
}

double yn(int n, double x) {
  if (n < 0) throw std::domain_error("bessel::yn requires n >= 0");
  if (!(x > 0)) throw std::domain_error("bessel::yn requires x > 0");
  if (n == 0) return y0(x);
  if (n == 1) return y1(x);
  double ym = y0(x), yc = y1(x);
  for (int k = 1; k < n; ++k) {
    const double yn1 = (2.0 * k / x) * yc - ym;
    ym = yc;
    yc = yn1;
  }
  return yc;
}

std::complex<double> hankel1(int n, double x) {
  return {jn(n, x), yn(n, x)};
}

}  // namespace scatbound::bessel
