#pragma once

#include "cotrop/coamoeba.h"
#include "cotrop/polynomial.h"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace cotrop {

/// Occupancy grid over [0, 2π)² with wraparound. Cell (i, j) has center
/// (2π(i+½)/R, 2π(j+½)/R); i indexes the first angle.
class TorusRaster {
 public:
  explicit TorusRaster(int size = 128);

  int size() const { return size_; }
  bool at(int i, int j) const { return cells_[index(i, j)] != 0; }
  void set(int i, int j, bool v = true) { cells_[index(i, j)] = v ? 1 : 0; }
  /// Cell containing the angle pair (any reals, reduced mod 2π).
  void mark(double theta1, double theta2);
  std::size_t count() const;
  double fraction() const;
  const std::vector<std::uint8_t>& cells() const { return cells_; }
  std::vector<std::uint8_t>& cells() { return cells_; }

  friend bool operator==(const TorusRaster&, const TorusRaster&) = default;

 private:
  std::size_t index(int i, int j) const;
  int size_;
  std::vector<std::uint8_t> cells_;
};

double cell_center(int index, int size);
int cell_of(double theta, int size);

struct SampleConfig {
  double log_modulus_min = -12;
  double log_modulus_max = 12;
  int moduli = 256;     // M
  int arguments = 256;  // K
  int raster = 512;     // R
  double root_tolerance = 1e-9;
  std::uint64_t seed = 0;
  int threads = 1;
  /// When in (0, 1/e], sampled points are pushed through H_t before marking.
  double ht_t = 0;
  /// Consecutive roots along the modulus walk closer than this many cells
  /// are joined by a segment; 0 marks isolated samples only.
  double max_link = 6;

  void validate() const;
};

/// Roots of Σ c_k x^k (coefficients low to high) by Aberth-Ehrlich iteration.
/// Zero roots are dropped; roots failing the backward-error test
/// |p(x)| <= tol · Σ|c_k||x|^k are discarded.
std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs, double tol, double angle_offset = 0.4);

/// Arguments of the curve f(z, w) = 0 over a grid of z values (solving for w)
/// and a grid of w values (solving for z).
TorusRaster sample_coamoeba(const ComplexPolynomial& f, const SampleConfig& cfg);

/// |z_j| ↦ |z_j|^{-1/log t}, arguments kept.
std::vector<Complex> ht_rescale(const std::vector<Complex>& p, double t);

/// a_α ↦ a_α (e t)^{-log|a_α|}.
ComplexPolynomial ft_family(const ComplexPolynomial& f, double t);

/// Dilation followed by erosion with the 3×3 square, on the torus.
TorusRaster closing(const TorusRaster& r);

/// Connected components of the unmarked cells of closing(r), 4-adjacency with wraparound.
int complement_components(const TorusRaster& r);

/// Flat-torus Hausdorff distance between the marked cell centers, in radians.
double raster_hausdorff(const TorusRaster& a, const TorusRaster& b);

/// Squared distance (in cells) from every cell to the nearest marked cell of r.
std::vector<double> squared_distance_transform(const TorusRaster& r);

/// Marks cells whose center satisfies `pred`.
TorusRaster predicate_raster(const std::function<bool(double, double)>& pred, int size);

/// Open pieces at cell centers plus every cell crossed by a codual line.
TorusRaster model_raster(const CoamoebaModel& model, int size);

/// (θ₁, θ₂) ↦ (θ₁, 2π − θ₂).
TorusRaster reflect_second(const TorusRaster& r);
TorusRaster rotate(const TorusRaster& r, int di, int dj);

/// Fraction of cells on which a and b agree.
double agreement(const TorusRaster& a, const TorusRaster& b);

}  // namespace cotrop
