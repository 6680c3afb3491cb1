#pragma once

#include "cotrop/polynomial.h"
#include "cotrop/rational.h"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace cotrop {

struct NewtonPolytope {
  int dimension = 0;         // ambient
  int affine_dimension = 0;  // of conv(support)
  std::vector<LatticePoint> support;   // sorted, unique
  std::vector<LatticePoint> vertices;  // extreme points, lexicographic
  std::vector<LatticePoint> boundary;  // counter-clockwise cycle; only for full-dimensional n = 2
};

/// Extreme points of conv(support) for n in {1, 2, 3}.
NewtonPolytope convex_hull(std::vector<LatticePoint> support);

/// Lattice point -> height ν(α).
using LiftedPointSet = std::map<LatticePoint, Rational>;

/// One linearity domain of the lower hull. The lifted support points lying on
/// the supporting hyperplane y = <x, slope> + offset are `support`; their
/// convex hull has corners `vertices` (counter-clockwise for 2-cells).
struct Cell {
  int dimension = 0;
  std::vector<LatticePoint> vertices;
  std::vector<LatticePoint> support;
  RationalPoint slope;
  Rational offset;

  Rational height_at(const LatticePoint& alpha) const;
};

struct SubdivisionEdge {
  LatticePoint a;  // a < b lexicographically
  LatticePoint b;
  std::vector<std::size_t> cells;
  bool boundary = false;  // lies on the boundary of the Newton polytope
};

struct RegularSubdivision {
  int dimension = 0;       // ambient
  int cell_dimension = 0;  // 2 for full-dimensional planar support, else lower
  std::vector<Cell> cells;
  std::vector<SubdivisionEdge> edges;  // only populated when cell_dimension == 2
  bool triangulation = false;
};

/// Regular subdivision induced by the lower hull of {(α, ν(α))}. Supports
/// n in {1, 2}; collinear planar supports give a 1-dimensional subdivision.
RegularSubdivision lower_hull_subdivision(const LiftedPointSet& lift);

bool is_triangulation(const RegularSubdivision& sub);

/// Perturbation bound used by perturb_to_triangulation.
Rational perturbation_bound();

/// Generic perturbation of the heights (by at most 2^-20 each, exactly) whose
/// lower hull is a triangulation. Returns `lift` unchanged when it already is one.
LiftedPointSet perturb_to_triangulation(const LiftedPointSet& lift, std::uint64_t seed);

/// Terms of `f` whose exponent lies in the closed cell.
PolynomialOverSeries truncate(const PolynomialOverSeries& f, const Cell& cell);

bool cell_contains(const Cell& cell, const LatticePoint& alpha);

/// ν_f(α) = ord(a_α).
LiftedPointSet lift_of(const PolynomialOverSeries& f);

/// ν(α) = -log|a_α| rounded to a dyadic rational; the spine lift of a complex polynomial.
LiftedPointSet spine_lift(const ComplexPolynomial& f);

/// Exact area of a counter-clockwise lattice polygon.
Rational polygon_area(const std::vector<LatticePoint>& ccw);

/// gcd of the coordinate differences.
std::int64_t lattice_length(const LatticePoint& a, const LatticePoint& b);

}  // namespace cotrop
