#pragma once

#include "cotrop/newton.h"
#include "cotrop/polynomial.h"
#include "cotrop/rational.h"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace cotrop {

/// f_trop(x) = max_α { <x, α> + c_α } with c_α = -ν_f(α).
struct TropicalPolynomial {
  std::map<LatticePoint, Rational> terms;

  int dimension() const { return terms.empty() ? 0 : static_cast<int>(terms.begin()->first.size()); }
};

TropicalPolynomial tropicalize(const PolynomialOverSeries& f);
TropicalPolynomial from_lift(const LiftedPointSet& lift);
LiftedPointSet to_lift(const TropicalPolynomial& p);

Rational eval_tropical(const TropicalPolynomial& p, const RationalPoint& x);

/// Exponents attaining the maximum at x.
std::vector<LatticePoint> maximizer_set(const TropicalPolynomial& p, const RationalPoint& x);

struct CurveEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  LatticePoint direction;  // primitive, pointing from -> to
  std::int64_t weight = 1;
  LatticePoint dual_a, dual_b;  // dual subdivision edge
  friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

struct CurveRay {
  std::size_t base = 0;
  LatticePoint direction;  // primitive
  std::int64_t weight = 1;
  LatticePoint dual_a, dual_b;
  friend bool operator==(const CurveRay&, const CurveRay&) = default;
};

/// Full line of a degenerate curve (collinear support): <x, normal> = <point, normal>.
struct CurveLine {
  RationalPoint point;
  LatticePoint direction;  // primitive
  std::int64_t weight = 1;
  LatticePoint dual_a, dual_b;
  friend bool operator==(const CurveLine&, const CurveLine&) = default;
};

/// Corner locus of a planar tropical polynomial, dual to its subdivision.
/// Vertex i is dual to subdivision cell vertex_cell[i].
struct TropicalCurve {
  std::vector<RationalPoint> vertices;
  std::vector<std::size_t> vertex_cell;
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;
  std::vector<CurveLine> lines;
  bool degenerate = false;

  friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;
};

/// Curve dual to a regular subdivision with full-dimensional planar cells,
/// or parallel lines for a 1-dimensional subdivision.
TropicalCurve dual_curve(const RegularSubdivision& sub);

/// Non-differentiability locus of p (n = 2, at least two terms).
TropicalCurve corner_locus_2d(const TropicalPolynomial& p);

bool duality_check(const TropicalCurve& curve, const RegularSubdivision& sub);

bool balancing_check(const TropicalCurve& curve);

/// Primitive integer vector parallel to v (v != 0).
LatticePoint primitive(const LatticePoint& v);

}  // namespace cotrop
