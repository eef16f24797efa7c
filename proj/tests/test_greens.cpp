#include "scatbound/greens.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "scatbound/bessel.hpp"

using namespace scatbound;
using std::complex;

namespace {

// Quadrature oracle: integral of (i/4) H0(k rho) over one square cell of
// side dx centered at the source, in polar coordinates (the integrand
// rho*H0 is bounded). Independent of the equivalent-disc closed form.
complex<double> self_cell_quadrature(double k, double dx) {
  const int n_theta = 512, n_r = 512;
  complex<double> sum{0, 0};
  for (int a = 0; a < n_theta; ++a) {
    const double theta = (a + 0.5) * (2.0 * kPi / n_theta);
    const double rmax =
        dx / 2.0 / std::max(std::abs(std::cos(theta)), std::abs(std::sin(theta)));
    for (int b = 0; b < n_r; ++b) {
      const double r = (b + 0.5) * (rmax / n_r);
      sum += complex<double>(0, 0.25) * bessel::hankel1(0, k * r) * r * (rmax / n_r) *
             (2.0 * kPi / n_theta);
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("TE off-diagonal kernel approaches the point-kernel limit at k r = 1") {
  // Pixel pair at separation k r ~= 1: entry -> k^2 dA (i/4) H0(k r) as
  // dx -> 0. H0(1) = 0.765198 + 0.088257i (Bessel-series oracle), so the
  // bracket at k r = 1 is -0.022064 + 0.191300i.
  const complex<double> bracket = complex<double>(0, 0.25) * bessel::hankel1(0, 1.0);
  CHECK(std::abs(bracket - complex<double>(-0.022064, 0.191300)) < 1e-6);

  const double lambda0 = 1.0;
  const double k = 2.0 * kPi / lambda0;
  const double r_target = 1.0 / k;  // ~0.159 lambda, fits in the 2R = 0.2 lambda disc
  double prev_err = -1.0;
  for (double dx : {lambda0 / 50, lambda0 / 100}) {
    const auto grid = build_grid(lambda0, 0.1 * lambda0, dx);
    const auto op = assemble_te(grid);
    // pick the pair whose separation is closest to 1/k
    int bi = 0, bj = 1;
    double best = 1e9;
    for (int j = 1; j < grid->n_pixels(); ++j) {
      const double r = (grid->center(0) - grid->center(j)).norm();
      if (std::abs(r - r_target) < best) {
        best = std::abs(r - r_target);
        bi = 0;
        bj = j;
      }
    }
    const double r = (grid->center(bi) - grid->center(bj)).norm();
    REQUIRE(std::abs(k * r - 1.0) < 0.1);
    const complex<double> point_limit = k * k * dx * dx * complex<double>(0, 0.25) *
                                        bessel::hankel1(0, k * r);
    const double err = std::abs(op.mat(bi, bj) - point_limit) / std::abs(point_limit);
    if (prev_err >= 0) CHECK(err < prev_err);  // converging to the point kernel
    prev_err = err;
    CHECK(err < 1e-3);
  }
}

TEST_CASE("TE operator is complex-symmetric on a random grid") {
  const auto grid = build_grid(1.0, 0.014, 0.005);  // ~24 pixels
  const auto op = assemble_te(grid);
  const double rel = (op.mat - op.mat.transpose()).norm() / op.mat.norm();
  CHECK(rel < 1e-10);
}

TEST_CASE("TE self-term closed form matches adaptive quadrature to 1%") {
  const double lambda0 = 1.0, dx = lambda0 / 100.0;
  const double k = 2.0 * kPi / lambda0;
  const double a = dx / std::sqrt(kPi);
  const complex<double> closed =
      complex<double>(0, 0.25) * (2.0 * kPi * a / k) * bessel::hankel1(1, k * a) -
      1.0 / (k * k);
  const complex<double> quad = self_cell_quadrature(k, dx);
  CHECK(std::abs(closed - quad) / std::abs(closed) < 0.01);

  // and the assembled diagonal is k^2 * closed - that very formula
  const auto grid = build_grid(lambda0, 0.75 * dx, dx);
  const auto op = assemble_te(grid);
  CHECK(std::abs(op.mat(0, 0) - k * k * closed) < 1e-12 * std::abs(op.mat(0, 0)));
}

TEST_CASE("TE diagonal has nonnegative imaginary part (radiating self-term)") {
  const auto grid = build_grid(1.0, 0.05, 0.01);
  const auto op = assemble_te(grid);
  for (int i = 0; i < op.dim(); ++i) CHECK(op.mat(i, i).imag() >= 0.0);
}

TEST_CASE("TE entries decay like r^{-1/2} at large separation") {
  // log-log slope of |kernel| vs separation over a decade, slope within
  // +-0.1 of -0.5. Evaluate the off-diagonal formula directly.
  const double lambda0 = 1.0, dx = lambda0 / 100.0;
  const double k = 2.0 * kPi / lambda0;
  const double a = dx / std::sqrt(kPi);
  const auto entry = [&](double r) {
    return std::abs(complex<double>(0, 1) * (kPi * k * a / 2.0) * bessel::jn(1, k * a) *
                    bessel::hankel1(0, k * r));
  };
  const double r1 = 10.0 * lambda0, r2 = 100.0 * lambda0;
  const double slope = std::log(entry(r2) / entry(r1)) / std::log(r2 / r1);
  CHECK(slope == doctest::Approx(-0.5).epsilon(0.2));
  CHECK(std::abs(slope + 0.5) < 0.1);
}

TEST_CASE("TM operator is complex-symmetric with interleaved ordering") {
  const auto grid = build_grid(1.0, 0.011, 0.005);  // ~12 pixels
  const auto op = assemble_tm(grid);
  REQUIRE(op.dim() == 2 * grid->n_pixels());
  const double rel = (op.mat - op.mat.transpose()).norm() / op.mat.norm();
  CHECK(rel < 1e-10);
}

TEST_CASE("TM far-field block becomes transverse at k r = 60") {
  const double lambda0 = 1.0;
  const double k = 2.0 * kPi / lambda0;
  const double r = 60.0 / k;
  // evaluate the dyadic kernel along the x axis: longitudinal = xx entry,
  // transverse = yy entry
  const complex<double> h0 = bessel::hankel1(0, k * r);
  const complex<double> h1 = bessel::hankel1(1, k * r);
  const complex<double> A = complex<double>(0, 0.25) * (k * k * h0 - k * h1 / r);
  const complex<double> B = complex<double>(0, 0.25) * (2.0 * k * h1 / r - k * k * h0);
  const complex<double> longitudinal = A + B;  // rhat = x
  const complex<double> transverse = A;
  CHECK(std::abs(longitudinal) / std::abs(transverse) < 0.05);
}

TEST_CASE("TM self block is the static depolarization -1/2 as dx -> 0") {
  const auto grid = build_grid(1.0, 0.8 * 1e-4, 1e-4);
  const auto op = assemble_tm(grid);
  CHECK(op.mat(0, 0).real() == doctest::Approx(-0.5).epsilon(1e-4));
  CHECK(op.mat(0, 1) == complex<double>(0, 0));
}

TEST_CASE("plane wave: unit amplitude, phase referenced to the origin") {
  const auto grid = build_grid(1.0, 0.05, 0.01);
  const double k = grid->wavenumber();
  const Eigen::Vector2d d(1.0, 0.0);
  const auto te = plane_wave(grid, Polarization::TE, d);
  for (int i = 0; i < grid->n_pixels(); ++i) {
    CHECK(std::abs(te.values[i]) == doctest::Approx(1.0).epsilon(1e-14));
    const complex<double> expected = std::exp(complex<double>(0, k * grid->center(i).x()));
    CHECK(std::abs(te.values[i] - expected) < 1e-13);  // value 1 at x = 0
  }
}

TEST_CASE("plane wave TM polarization is orthogonal to propagation") {
  const auto grid = build_grid(1.0, 0.03, 0.01);
  const Eigen::Vector2d d = Eigen::Vector2d(0.3, -0.8).normalized();
  const auto tm = plane_wave(grid, Polarization::TM, d);
  for (int i = 0; i < grid->n_pixels(); ++i) {
    const complex<double> dot = tm.values[2 * i] * d.x() + tm.values[2 * i + 1] * d.y();
    CHECK(std::abs(dot) < 1e-14);
    const double amp = std::sqrt(std::norm(tm.values[2 * i]) + std::norm(tm.values[2 * i + 1]));
    CHECK(amp == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("plane wave rejects the zero direction") {
  const auto grid = build_grid(1.0, 0.03, 0.01);
  CHECK_THROWS_AS(plane_wave(grid, Polarization::TE, Eigen::Vector2d(0, 0)),
                  std::invalid_argument);
}
