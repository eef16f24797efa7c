#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

namespace scatbound {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// 2D polarizations: TE carries the scalar out-of-plane E_z, TM the
// in-plane 2-vector (E_x, E_y).
enum class Polarization { TE, TM };

inline int components(Polarization p) { return p == Polarization::TE ? 1 : 2; }
inline const char* to_string(Polarization p) { return p == Polarization::TE ? "TE" : "TM"; }

struct EmptyRegionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Square-lattice discretization of the circular design region: all cells
/// of spacing dx whose centers fall strictly inside the disc of the given
/// radius. Centers sit at half-integer multiples of dx ((i+1/2)dx, (j+1/2)dx),
/// ordered row-major by y then x. Immutable after construction.
class PixelGrid {
 public:
  PixelGrid(double lambda0, double radius, double dx,
            std::vector<Eigen::Vector2d> centers)
      : lambda0_(lambda0), radius_(radius), dx_(dx), centers_(std::move(centers)) {}

  double lambda0() const { return lambda0_; }
  double radius() const { return radius_; }
  double dx() const { return dx_; }
  double wavenumber() const { return 2.0 * kPi / lambda0_; }
  double cell_area() const { return dx_ * dx_; }
  int n_pixels() const { return static_cast<int>(centers_.size()); }
  const std::vector<Eigen::Vector2d>& centers() const { return centers_; }
  const Eigen::Vector2d& center(int i) const { return centers_[static_cast<size_t>(i)]; }

  bool same_as(const PixelGrid& other) const {
    return lambda0_ == other.lambda0_ && radius_ == other.radius_ &&
           dx_ == other.dx_ && centers_.size() == other.centers_.size();
  }

 private:
  double lambda0_, radius_, dx_;
  std::vector<Eigen::Vector2d> centers_;
};

using GridPtr = std::shared_ptr<const PixelGrid>;

/// Builds the pixelated disc. Throws EmptyRegionError when no cell center
/// lands inside the disc, std::invalid_argument on bad parameters.
GridPtr build_grid(double lambda0, double radius, double dx);

/// Complex field sampled on the grid pixels; TM interleaves components as
/// (x1, y1, x2, y2, ...).
struct FieldArray {
  Polarization pol = Polarization::TE;
  GridPtr grid;
  Eigen::VectorXcd values;

  int size() const { return static_cast<int>(values.size()); }
  bool compatible_with(const FieldArray& other) const {
    return pol == other.pol && grid && other.grid && grid->same_as(*other.grid) &&
           values.size() == other.values.size();
  }
};

FieldArray make_field(Polarization pol, GridPtr grid);  // zero-initialized

/// delta_A * sum_i conj(u_i) v_i  (conjugate-linear in the first argument).
std::complex<double> inner(const FieldArray& u, const FieldArray& v);
double norm(const FieldArray& u);

/// Per-pixel real contrast with box bounds.
struct ContrastMap {
  Eigen::VectorXd chi;
  double chi_minus = 0.0;
  double chi_plus = 0.0;

  double chi_bar() const { return 0.5 * (chi_plus + chi_minus); }
  double delta_chi() const { return 0.5 * std::abs(chi_plus - chi_minus); }
};

/// Validates bounds and box membership of every entry.
ContrastMap make_contrast(Eigen::VectorXd chi, double chi_minus, double chi_plus);

/// Uniform contrast at the midpoint value (or any value within bounds).
ContrastMap uniform_contrast(int n_pixels, double value, double chi_minus, double chi_plus);

}  // namespace scatbound
