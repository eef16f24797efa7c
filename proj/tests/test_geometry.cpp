#include "scatbound/geometry.hpp"

#include <complex>

#include "doctest.h"
#include "scatbound/rng.hpp"

using namespace scatbound;

namespace {

// Independent lattice count in exact integer arithmetic: center
// (i+1/2)dx,(j+1/2)dx lies inside radius r_int*dx/2 iff
// (2i+1)^2 + (2j+1)^2 < r_int^2.
long brute_force_count(long r_int) {
  const long m = r_int / 2 + 2;
  long count = 0;
  for (long j = -m; j < m; ++j)
    for (long i = -m; i < m; ++i)
      if ((2 * i + 1) * (2 * i + 1) + (2 * j + 1) * (2 * j + 1) < r_int * r_int) ++count;
  return count;
}

FieldArray random_field(Polarization pol, GridPtr grid, std::uint64_t seed) {
  FieldArray f = make_field(pol, grid);
  SplitMix64 rng(seed);
  for (int i = 0; i < f.size(); ++i)
    f.values[i] = std::complex<double>(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return f;
}

}  // namespace

TEST_CASE("pixel count approaches pi R^2 / dx^2") {
  const auto grid = build_grid(1.0, 0.1, 1.0 / 100.0);
  const double expected = kPi * 0.1 * 0.1 * 100.0 * 100.0;
  CHECK(grid->n_pixels() / expected > 0.85);
  CHECK(grid->n_pixels() / expected < 1.15);
}

TEST_CASE("frozen regression count for R=0.1, dx=0.01") {
  // Independent point-in-disc counting (scripted once, re-derived here in
  // integer arithmetic): 316 centers inside. 2R/dx = 20.
  const auto grid = build_grid(1.0, 0.1, 0.01);
  CHECK(grid->n_pixels() == 316);
  CHECK(brute_force_count(20) == 316);
}

TEST_CASE("degenerate radius raises empty region error") {
  // Nearest half-offset center sits at dx/sqrt(2) from the origin.
  CHECK_THROWS_AS(build_grid(1.0, 0.4 * 0.01, 0.01), EmptyRegionError);
  CHECK_THROWS_AS(build_grid(1.0, 0.5 * 0.01, 0.01), EmptyRegionError);
  CHECK_THROWS_AS(build_grid(1.0, 0.1, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(1.0, 0.0, 0.01), std::invalid_argument);
}

TEST_CASE("every center strictly inside the disc, deterministic ordering") {
  const auto a = build_grid(1.0, 0.05, 0.002);
  const auto b = build_grid(1.0, 0.05, 0.002);
  REQUIRE(a->n_pixels() == b->n_pixels());
  for (int i = 0; i < a->n_pixels(); ++i) {
    CHECK(a->center(i).norm() < 0.05);
    CHECK(a->center(i) == b->center(i));
  }
  // row-major by y then x
  for (int i = 1; i < a->n_pixels(); ++i) {
    const auto &p = a->center(i - 1), &q = a->center(i);
    CHECK((q.y() > p.y() || (q.y() == p.y() && q.x() > p.x())));
  }
}

TEST_CASE("inner product of the constant field is N dA") {
  const auto grid = build_grid(1.0, 0.03, 0.005);
  FieldArray u = make_field(Polarization::TE, grid);
  u.values.setOnes();
  const auto v = inner(u, u);
  CHECK(v.real() == doctest::Approx(grid->n_pixels() * grid->cell_area()).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("inner matches a hand-rolled summation oracle on 3 pixels") {
  const auto grid = build_grid(1.0, 0.0072, 0.005);  // small disc: 4 pixels
  REQUIRE(grid->n_pixels() == 4);
  const auto u = random_field(Polarization::TE, grid, 7);
  const auto v = random_field(Polarization::TE, grid, 8);
  std::complex<double> expect{0, 0};
  for (int i = 0; i < 4; ++i) expect += std::conj(u.values[i]) * v.values[i];
  expect *= grid->cell_area();
  const auto got = inner(u, v);
  CHECK(std::abs(got - expect) <= 1e-14 * std::abs(expect));
}

TEST_CASE("Hermitian symmetry and linearity in the second argument") {
  const auto grid = build_grid(1.0, 0.02, 0.004);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto u = random_field(Polarization::TM, grid, 100 + s);
    const auto v = random_field(Polarization::TM, grid, 200 + s);
    auto w = random_field(Polarization::TM, grid, 300 + s);
    CHECK(std::abs(inner(u, v) - std::conj(inner(v, u))) < 1e-12);

    const std::complex<double> a{0.7, -1.3};
    FieldArray av_plus_w = w;
    av_plus_w.values = a * v.values + w.values;
    const auto lhs = inner(u, av_plus_w);
    const auto rhs = a * inner(u, v) + inner(u, w);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("triangle inequality for random fields") {
  const auto grid = build_grid(1.0, 0.02, 0.004);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto u = random_field(Polarization::TE, grid, 400 + s);
    const auto v = random_field(Polarization::TE, grid, 500 + s);
    FieldArray sum = u;
    sum.values += v.values;
    CHECK(norm(sum) <= (norm(u) + norm(v)) * (1 + 1e-12));
  }
}

TEST_CASE("mismatched grids or polarizations rejected") {
  const auto g1 = build_grid(1.0, 0.02, 0.004);
  const auto g2 = build_grid(1.0, 0.03, 0.004);
  const auto u = random_field(Polarization::TE, g1, 1);
  const auto v = random_field(Polarization::TE, g2, 2);
  const auto w = random_field(Polarization::TM, g1, 3);
  CHECK_THROWS_AS(inner(u, v), std::invalid_argument);
  CHECK_THROWS_AS(inner(u, w), std::invalid_argument);
}

TEST_CASE("contrast map validates box membership and derived values") {
  Eigen::VectorXd chi(3);
  chi << 0.0, 0.25, 0.5;
  const auto cm = make_contrast(chi, 0.0, 0.5);
  CHECK(cm.chi_bar() == doctest::Approx(0.25));
  CHECK(cm.delta_chi() == doctest::Approx(0.25));
  CHECK_THROWS_AS(make_contrast(chi, 0.0, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(make_contrast(chi, 0.6, 0.2), std::invalid_argument);

  const auto metal = make_contrast(Eigen::VectorXd::Constant(2, -1.0), -2.0, 0.0);
  CHECK(metal.chi_bar() == doctest::Approx(-1.0));
  CHECK(metal.delta_chi() == doctest::Approx(1.0));
}
