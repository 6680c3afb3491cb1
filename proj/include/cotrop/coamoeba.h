#pragma once

#include "cotrop/newton.h"
#include "cotrop/polynomial.h"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cotrop {

using TorusPoint = std::vector<double>;

/// Reduce to (-π, π].
double wrap_pi(double theta);

/// Flat torus distance between two points of [0, 2π)^n.
double torus_distance(const TorusPoint& a, const TorusPoint& b);

// ---------------------------------------------------------------------------
// Standard line coamoeba: args of 1 + z_1 + ... + z_n = 0.

/// Whether some r > 0 solves 1 + Σ r_j e^{iθ_j} = 0 (open), or the closure of
/// that set (closed). n = 2 is decided analytically, n >= 3 by
/// line_coamoeba_max_min_slack.
bool line_coamoeba_membership(const TorusPoint& theta, bool closed);

/// Optimum of: maximize s subject to Σ r_j e^{iθ_j} = -1, r_j >= s, s <= 1.
/// Positive exactly on the open coamoeba, >= 0 on its closure; -inf when the
/// system is infeasible even with r >= 0 relaxed to r >= s for every s.
double line_coamoeba_max_min_slack(const TorusPoint& theta);

struct Point2 {
  double x = 0;
  double y = 0;
};
using Polygon = std::vector<Point2>;

/// The two closed triangles whose interiors make up the planar line coamoeba.
std::array<Polygon, 2> line_coamoeba_polygons();

double polygon_area(const Polygon& poly);

/// Sutherland-Hodgman clip to the axis-parallel box [lo, hi]²; empty when disjoint.
Polygon clip_to_box(const Polygon& poly, double lo, double hi);

/// Pieces of `poly` translated by 2πℤ² and clipped to [0, 2π]².
std::vector<Polygon> clip_to_fundamental_domain(const Polygon& poly);

// ---------------------------------------------------------------------------
// Simplex coamoebas: f = a_0 z^{α_0} (1 + Σ a_k z^{α_k - α_0}).

struct SimplexCoamoeba {
  /// Row k is α_k - α_0; this is ᵗL for L with columns α_k - α_0.
  std::vector<std::vector<std::int64_t>> matrix;
  /// arg(a_k / a_0) in [0, 2π).
  std::vector<double> phases;
  std::int64_t determinant = 1;
  LatticePoint base;                 // α_0
  std::vector<LatticePoint> others;  // α_1..α_n in row order

  int dimension() const { return static_cast<int>(phases.size()); }

  /// ᵗL θ + phases.
  TorusPoint transport(const TorusPoint& theta) const;
  bool contains(const TorusPoint& theta, bool closed) const;
};

/// Polynomial supported exactly on the vertices of a lattice simplex.
SimplexCoamoeba simplex_coamoeba(const ComplexPolynomial& f);
SimplexCoamoeba simplex_coamoeba(const ComplexPolynomial& f, const Cell& cell);
SimplexCoamoeba simplex_coamoeba(const PolynomialOverSeries& f, const Cell& cell);

/// Preimages of the two standard triangles: 2·det triangles, each translated
/// so that its centroid lies in [0, 2π)².
std::vector<Polygon> simplex_coamoeba_polygons_2d(const SimplexCoamoeba& s);

// ---------------------------------------------------------------------------
// Codual hyperplanes.

/// <normal, x> ≡ offset (mod 2π) with normal = α - β and
/// offset = π - arg(a_α) + arg(a_β).
struct CodualHyperplane {
  LatticePoint normal;
  double offset = 0;
  LatticePoint alpha;
  LatticePoint beta;
  bool external = false;

  /// Signed residual of <normal, x> - offset reduced to (-π, π].
  double residual(const TorusPoint& x) const;
  bool contains(const TorusPoint& x, double eps = 1e-9) const;

  /// Number of parallel closed geodesics making up the hyperplane (n = 2).
  std::int64_t circle_count() const;
  /// Point at parameter s ∈ [0, 1) on circle `circle` (n = 2).
  TorusPoint point_at(std::size_t circle, double s) const;
  /// Euclidean length of one circle (n = 2).
  double circle_length() const;
  /// Parameters s ∈ [0, 1) where circle `circle` meets `other` (n = 2).
  std::vector<double> crossings(std::size_t circle, const CodualHyperplane& other) const;
};

CodualHyperplane codual_hyperplane(const LatticePoint& alpha, double arg_alpha, const LatticePoint& beta,
                                   double arg_beta, bool external);

std::vector<CodualHyperplane> codual_hyperplanes(const ComplexPolynomial& f, const RegularSubdivision& sub);
std::vector<CodualHyperplane> codual_hyperplanes(const PolynomialOverSeries& f, const RegularSubdivision& sub);

// ---------------------------------------------------------------------------
// Glued models.

struct CoamoebaModel {
  std::vector<SimplexCoamoeba> pieces;
  std::vector<CodualHyperplane> codual_lines;
  int dimension = 2;

  /// Union of the piece coamoebas.
  bool contains(const TorusPoint& theta, bool closed) const;
};

/// One simplex coamoeba per cell of a triangulation, plus the codual line of
/// every edge. Cells must carry no support points other than their vertices.
CoamoebaModel glue_coamoeba(const ComplexPolynomial& f, const RegularSubdivision& sub);
CoamoebaModel glue_coamoeba(const PolynomialOverSeries& f, const RegularSubdivision& sub);

enum class LocalizationLabel { FullDim, Discrete };

const char* to_string(LocalizationLabel label);

struct LocalizationComponent {
  LocalizationLabel label = LocalizationLabel::Discrete;
  std::size_t circle = 0;
  double start = 0;  // circle parameter of the first sample in the run
  double end = 0;    // and of the last one (may wrap past 1)
  std::size_t samples = 0;
  TorusPoint midpoint;
};

/// Samples `line` at `resolution` points per circle and groups the samples
/// whose normal neighbourhoods meet the open model on both sides into runs.
/// Runs longer than the probe footprint are FULL_DIM; shorter ones are DISCRETE.
std::vector<LocalizationComponent> classify_localization(const CoamoebaModel& model, const CodualHyperplane& line,
                                                         int resolution);

/// Distance along `line` from a component midpoint to the nearest crossing
/// with any other codual line of the model; +inf when there is none.
double distance_to_codual_crossing(const CoamoebaModel& model, const CodualHyperplane& line,
                                   const LocalizationComponent& component);

}  // namespace cotrop
