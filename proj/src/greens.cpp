#include "scatbound/greens.hpp"

#include <cmath>

#include "scatbound/bessel.hpp"

namespace scatbound {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

}  // namespace

GreensOperator assemble_te(GridPtr grid) {
  const int n = grid->n_pixels();
  const double k = grid->wavenumber();
  const double a = grid->dx() / std::sqrt(kPi);  // equal-area disc radius
  const double disc_factor = kPi * k * a / 2.0 * bessel::jn(1, k * a);
  const complex<double> self = kI * (kPi * k * a / 2.0) * bessel::hankel1(1, k * a) - 1.0;

  GreensOperator op;
  op.pol = Polarization::TE;
  op.grid = grid;
  op.mat.resize(n, n);
  for (int i = 0; i < n; ++i) {
    op.mat(i, i) = self;
    for (int j = i + 1; j < n; ++j) {
      const double r = (grid->center(i) - grid->center(j)).norm();
      const complex<double> v = kI * disc_factor * bessel::hankel1(0, k * r);
      op.mat(i, j) = v;
      op.mat(j, i) = v;
    }
  }
  return op;
}

GreensOperator assemble_tm(GridPtr grid) {
  const int n = grid->n_pixels();
  const double k = grid->wavenumber();
  const double a = grid->dx() / std::sqrt(kPi);
  // Equivalent-disc integration factor (2 pi a / k) J1(ka); the dyadic
  // kernel components solve the Helmholtz equation away from the source,
  // so the mean-value identity applies to each of them.
  const double disc_factor = 2.0 * kPi * a / k * bessel::jn(1, k * a);
  // Self block: -I/2 depolarization plus the regular part of the
  // equivalent-disc integral, isotropic by symmetry.
  const complex<double> te_self = kI * (kPi * k * a / 2.0) * bessel::hankel1(1, k * a) - 1.0;
  const complex<double> self = 0.5 * (te_self - 1.0);

  GreensOperator op;
  op.pol = Polarization::TM;
  op.grid = grid;
  op.mat = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    op.mat(2 * i, 2 * i) = self;
    op.mat(2 * i + 1, 2 * i + 1) = self;
    for (int j = i + 1; j < n; ++j) {
      const Eigen::Vector2d dvec = grid->center(i) - grid->center(j);
      const double r = dvec.norm();
      const Eigen::Vector2d rhat = dvec / r;
      const complex<double> h0 = bessel::hankel1(0, k * r);
      const complex<double> h1 = bessel::hankel1(1, k * r);
      // (k^2 I + grad grad) g  =  A I + B rhat rhat^T with
      //   A = (i/4) (k^2 H0 - k H1 / r),  B = (i/4) (2 k H1 / r - k^2 H0).
      const complex<double> A = kI / 4.0 * (k * k * h0 - k * h1 / r);
      const complex<double> B = kI / 4.0 * (2.0 * k * h1 / r - k * k * h0);
      for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
          const complex<double> v =
              disc_factor * (A * (p == q ? 1.0 : 0.0) + B * rhat[p] * rhat[q]);
          op.mat(2 * i + p, 2 * j + q) = v;
          op.mat(2 * j + q, 2 * i + p) = v;
        }
      }
    }
  }
  return op;
}

FieldArray plane_wave(GridPtr grid, Polarization pol, const Eigen::Vector2d& direction) {
  const double dnorm = direction.norm();
  if (!(dnorm > 0)) throw std::invalid_argument("plane_wave: zero direction vector");
  const Eigen::Vector2d d = direction / dnorm;
  const double k = grid->wavenumber();
  FieldArray f = make_field(pol, grid);
  const int n = grid->n_pixels();
  if (pol == Polarization::TE) {
    for (int i = 0; i < n; ++i)
      f.values[i] = std::exp(kI * (k * d.dot(grid->center(i))));
  } else {
    const Eigen::Vector2d p(-d.y(), d.x());  // in-plane polarization, orthogonal to d
    for (int i = 0; i < n; ++i) {
      const complex<double> phase = std::exp(kI * (k * d.dot(grid->center(i))));
      f.values[2 * i] = phase * p.x();
      f.values[2 * i + 1] = phase * p.y();
    }
  }
  return f;
}

}  // namespace scatbound
