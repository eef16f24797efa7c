#include "scatbound/geometry.hpp"

#include <cmath>

namespace scatbound {

GridPtr build_grid(double lambda0, double radius, double dx) {
  if (!(lambda0 > 0)) throw std::invalid_argument("build_grid: lambda0 must be > 0");
  if (!(dx > 0)) throw std::invalid_argument("build_grid: dx must be > 0");
  if (!(radius > 0)) throw std::invalid_argument("build_grid: radius must be > 0");

  // Cell centers at ((i+1/2) dx, (j+1/2) dx); membership tests the center
  // strictly against the disc. Row-major by y then x.
  const int m = static_cast<int>(std::ceil(radius / dx)) + 1;
  std::vector<Eigen::Vector2d> centers;
  const double r2 = radius * radius;
  for (int j = -m; j < m; ++j) {
    const double y = (j + 0.5) * dx;
    for (int i = -m; i < m; ++i) {
      const double x = (i + 0.5) * dx;
      if (x * x + y * y < r2) centers.emplace_back(x, y);
    }
  }
  if (centers.empty())
    throw EmptyRegionError("build_grid: empty region (no cell center inside the disc)");
  return std::make_shared<const PixelGrid>(lambda0, radius, dx, std::move(centers));
}

FieldArray make_field(Polarization pol, GridPtr grid) {
  FieldArray f;
  f.pol = pol;
  f.grid = std::move(grid);
  f.values = Eigen::VectorXcd::Zero(f.grid->n_pixels() * components(pol));
  return f;
}

std::complex<double> inner(const FieldArray& u, const FieldArray& v) {
  if (!u.compatible_with(v))
    throw std::invalid_argument("inner: mismatched grids or polarizations");
  return u.grid->cell_area() * u.values.dot(v.values);
}

double norm(const FieldArray& u) {
  return std::sqrt(u.grid->cell_area()) * u.values.norm();
}

ContrastMap make_contrast(Eigen::VectorXd chi, double chi_minus, double chi_plus) {
  if (!(chi_minus <= chi_plus))
    throw std::invalid_argument("make_contrast: chi_minus must be <= chi_plus");
  for (Eigen::Index i = 0; i < chi.size(); ++i) {
    if (!(chi[i] >= chi_minus && chi[i] <= chi_plus))
      throw std::invalid_argument("make_contrast: entry outside [chi_minus, chi_plus]");
  }
  return ContrastMap{std::move(chi), chi_minus, chi_plus};
}

ContrastMap uniform_contrast(int n_pixels, double value, double chi_minus, double chi_plus) {
  return make_contrast(Eigen::VectorXd::Constant(n_pixels, value), chi_minus, chi_plus);
}

}  // namespace scatbound
