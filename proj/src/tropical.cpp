#include "cotrop/tropical.h"

#include "cotrop/error.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace cotrop {

LatticePoint primitive(const LatticePoint& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "zero vector has no primitive direction");
  LatticePoint out = v;
  for (auto& x : out) x /= g;
  return out;
}

TropicalPolynomial tropicalize(const PolynomialOverSeries& f) {
  TropicalPolynomial p;
  for (const auto& [alpha, a] : f.terms()) p.terms[alpha] = -order(a);
  return p;
}

TropicalPolynomial from_lift(const LiftedPointSet& lift) {
  TropicalPolynomial p;
  for (const auto& [alpha, h] : lift) p.terms[alpha] = -h;
  return p;
}

LiftedPointSet to_lift(const TropicalPolynomial& p) {
  LiftedPointSet lift;
  for (const auto& [alpha, c] : p.terms) lift[alpha] = -c;
  return lift;
}

namespace {

Rational term_value(const LatticePoint& alpha, const Rational& c, const RationalPoint& x) {
  if (x.size() != alpha.size()) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  Rational v = c;
  for (std::size_t j = 0; j < alpha.size(); ++j) v += x[j] * Rational(alpha[j]);
  return v;
}

}  // namespace

Rational eval_tropical(const TropicalPolynomial& p, const RationalPoint& x) {
  if (p.terms.empty()) throw Error(ErrorCode::InvalidArgument, "empty tropical polynomial");
  bool first = true;
  Rational best;
  for (const auto& [alpha, c] : p.terms) {
    Rational v = term_value(alpha, c, x);
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

std::vector<LatticePoint> maximizer_set(const TropicalPolynomial& p, const RationalPoint& x) {
  const Rational best = eval_tropical(p, x);
  std::vector<LatticePoint> out;
  for (const auto& [alpha, c] : p.terms) {
    if (term_value(alpha, c, x) == best) out.push_back(alpha);
  }
  return out;
}

namespace {

// Outward normal (dy, -dx) of the edge a -> b of a counter-clockwise cell.
LatticePoint outward_normal(const LatticePoint& a, const LatticePoint& b) {
  return primitive(LatticePoint{b[1] - a[1], -(b[0] - a[0])});
}

// Orientation of edge {a, b} as it appears in the ccw vertex cycle of cell.
std::pair<LatticePoint, LatticePoint> oriented(const Cell& cell, const LatticePoint& a, const LatticePoint& b) {
  const auto& v = cell.vertices;
  for (std::size_t e = 0; e < v.size(); ++e) {
    if (v[e] == a && v[(e + 1) % v.size()] == b) return {a, b};
    if (v[e] == b && v[(e + 1) % v.size()] == a) return {b, a};
  }
  throw Error(ErrorCode::InvalidArgument, "edge not on cell boundary");
}

}  // namespace

TropicalCurve dual_curve(const RegularSubdivision& sub) {
  TropicalCurve curve;
  if (sub.dimension != 2) throw Error(ErrorCode::UnsupportedDimension, "tropical curves need n = 2");
  if (sub.cell_dimension == 0) throw Error(ErrorCode::EmptyCurve, "a single term has an empty corner locus");
  if (sub.cell_dimension == 1) {
    curve.degenerate = true;
    // Each interior breakpoint of the 1-dimensional subdivision gives a line
    // orthogonal to the support direction, through the vertex of either cell.
    for (const auto& cell : sub.cells) {
      CurveLine line;
      line.point = cell.slope;
      LatticePoint d{cell.vertices[1][0] - cell.vertices[0][0], cell.vertices[1][1] - cell.vertices[0][1]};
      line.direction = primitive(LatticePoint{-d[1], d[0]});
      line.weight = lattice_length(cell.vertices[0], cell.vertices[1]);
      line.dual_a = std::min(cell.vertices[0], cell.vertices[1]);
      line.dual_b = std::max(cell.vertices[0], cell.vertices[1]);
      curve.lines.push_back(std::move(line));
    }
    return curve;
  }
  for (std::size_t ci = 0; ci < sub.cells.size(); ++ci) {
    curve.vertices.push_back(sub.cells[ci].slope);
    curve.vertex_cell.push_back(ci);
  }
  for (const auto& e : sub.edges) {
    const std::int64_t weight = lattice_length(e.a, e.b);
    if (e.boundary) {
      const Cell& cell = sub.cells[e.cells.front()];
      auto [p, q] = oriented(cell, e.a, e.b);
      curve.rays.push_back({e.cells.front(), outward_normal(p, q), weight, e.a, e.b});
    } else {
      const std::size_t from = e.cells[0], to = e.cells[1];
      auto [p, q] = oriented(sub.cells[from], e.a, e.b);
      curve.edges.push_back({from, to, outward_normal(p, q), weight, e.a, e.b});
    }
  }
  return curve;
}

TropicalCurve corner_locus_2d(const TropicalPolynomial& p) {
  if (p.dimension() != 2) throw Error(ErrorCode::UnsupportedDimension, "corner_locus_2d needs n = 2");
  if (p.terms.size() < 2) throw Error(ErrorCode::EmptyCurve, "a single term has an empty corner locus");
  return dual_curve(lower_hull_subdivision(to_lift(p)));
}

namespace {

Rational dot(const LatticePoint& a, const RationalPoint& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += b[i] * Rational(a[i]);
  return s;
}

std::int64_t dot_int(const LatticePoint& a, const LatticePoint& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

bool duality_check(const TropicalCurve& curve, const RegularSubdivision& sub) {
  if (curve.degenerate || sub.cell_dimension != 2) {
    return curve.degenerate && sub.cell_dimension == 1 && curve.lines.size() == sub.cells.size();
  }
  if (curve.vertices.size() != sub.cells.size()) return false;
  if (curve.edges.size() + curve.rays.size() != sub.edges.size()) return false;
  for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
    if (curve.vertex_cell[i] >= sub.cells.size()) return false;
    if (curve.vertices[i] != sub.cells[curve.vertex_cell[i]].slope) return false;
  }
  std::map<std::pair<LatticePoint, LatticePoint>, const SubdivisionEdge*> edges;
  for (const auto& e : sub.edges) edges[{e.a, e.b}] = &e;
  std::set<std::pair<LatticePoint, LatticePoint>> used;
  auto dual_ok = [&](const LatticePoint& a, const LatticePoint& b, const LatticePoint& dir, bool boundary) {
    auto it = edges.find({a, b});
    if (it == edges.end() || it->second->boundary != boundary) return false;
    if (!used.insert({a, b}).second) return false;
    LatticePoint ab{a[0] - b[0], a[1] - b[1]};
    return dot_int(ab, dir) == 0;
  };
  for (const auto& e : curve.edges) {
    if (!dual_ok(e.dual_a, e.dual_b, e.direction, false)) return false;
    // The bounded edge itself is orthogonal to its dual: <α-β, v_to - v_from> = 0.
    RationalPoint span{curve.vertices[e.to][0] - curve.vertices[e.from][0],
                       curve.vertices[e.to][1] - curve.vertices[e.from][1]};
    if (dot(LatticePoint{e.dual_a[0] - e.dual_b[0], e.dual_a[1] - e.dual_b[1]}, span) != 0) return false;
  }
  for (const auto& r : curve.rays) {
    if (!dual_ok(r.dual_a, r.dual_b, r.direction, true)) return false;
  }
  return true;
}

bool balancing_check(const TropicalCurve& curve) {
  if (curve.degenerate) return true;
  std::vector<LatticePoint> sums(curve.vertices.size(), LatticePoint{0, 0});
  for (const auto& e : curve.edges) {
    for (int j = 0; j < 2; ++j) {
      sums[e.from][j] += e.weight * e.direction[j];
      sums[e.to][j] -= e.weight * e.direction[j];
    }
  }
  for (const auto& r : curve.rays) {
    for (int j = 0; j < 2; ++j) sums[r.base][j] += r.weight * r.direction[j];
  }
  for (const auto& s : sums) {
    if (s[0] != 0 || s[1] != 0) return false;
  }
  return true;
}

}  // namespace cotrop
