#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include "cotrop/coamoeba.h"
#include "cotrop/tropical.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <string>

namespace oracles {

using namespace cotrop;

inline TropicalPolynomial random_tropical(std::mt19937_64& rng, int max_terms = 12, int box = 6) {
  std::uniform_int_distribution<int> count(2, max_terms), coord(0, box), num(-12, 12), den(1, 4);
  TropicalPolynomial p;
  const int n = count(rng);
  while (static_cast<int>(p.terms.size()) < n) p.terms[{coord(rng), coord(rng)}] = Rational(num(rng), den(rng));
  return p;
}

inline double segment_distance(double px, double py, double ax, double ay, double dx, double dy, double smax) {
  double dd = dx * dx + dy * dy;
  double s = dd == 0 ? 0 : ((px - ax) * dx + (py - ay) * dy) / dd;
  s = std::clamp(s, 0.0, smax);
  return std::hypot(px - ax - s * dx, py - ay - s * dy);
}

inline double curve_distance(const TropicalCurve& c, double x, double y) {
  double best = std::numeric_limits<double>::infinity();
  auto pt = [&](std::size_t i) { return std::make_pair(to_double(c.vertices[i][0]), to_double(c.vertices[i][1])); };
  for (const auto& e : c.edges) {
    auto [ax, ay] = pt(e.from);
    auto [bx, by] = pt(e.to);
    best = std::min(best, segment_distance(x, y, ax, ay, bx - ax, by - ay, 1));
  }
  for (const auto& r : c.rays) {
    auto [ax, ay] = pt(r.base);
    best = std::min(best, segment_distance(x, y, ax, ay, static_cast<double>(r.direction[0]),
                                           static_cast<double>(r.direction[1]), 1e300));
  }
  for (const auto& l : c.lines) {
    double ax = to_double(l.point[0]), ay = to_double(l.point[1]);
    double dx = static_cast<double>(l.direction[0]), dy = static_cast<double>(l.direction[1]);
    best = std::min(best, std::abs((x - ax) * dy - (y - ay) * dx) / std::hypot(dx, dy));
  }
  return best;
}

/// Points emitted on the curve have at least two maximizers; grid points
/// further than one step from the curve have exactly one.
inline bool kapranov_check(const TropicalPolynomial& p, const TropicalCurve& c, std::mt19937_64& rng, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  std::uniform_int_distribution<int> frac(1, 15);
  auto on_curve = [&](const RationalPoint& x) { return maximizer_set(p, x).size() >= 2; };
  for (const auto& v : c.vertices)
    if (maximizer_set(p, v).size() < 3) return fail("vertex with fewer than three maximizers");
  for (const auto& e : c.edges) {
    for (int k = 0; k < 3; ++k) {
      Rational s(frac(rng), 16);
      RationalPoint x{c.vertices[e.from][0] + s * (c.vertices[e.to][0] - c.vertices[e.from][0]),
                      c.vertices[e.from][1] + s * (c.vertices[e.to][1] - c.vertices[e.from][1])};
      if (!on_curve(x)) return fail("edge point with one maximizer");
    }
  }
  for (const auto& r : c.rays) {
    for (int k = 0; k < 3; ++k) {
      Rational s(frac(rng), 2);
      RationalPoint x{c.vertices[r.base][0] + s * r.direction[0], c.vertices[r.base][1] + s * r.direction[1]};
      if (!on_curve(x)) return fail("ray point with one maximizer");
    }
  }
  for (const auto& l : c.lines) {
    for (int k = -2; k <= 2; ++k) {
      RationalPoint x{l.point[0] + Rational(k) * l.direction[0], l.point[1] + Rational(k) * l.direction[1]};
      if (!on_curve(x)) return fail("line point with one maximizer");
    }
  }
  double lo = -4, hi = 4;
  for (const auto& v : c.vertices)
    for (const auto& x : v) {
      lo = std::min(lo, to_double(x) - 4);
      hi = std::max(hi, to_double(x) + 4);
    }
  const int steps = 32;
  const Rational base = approximate_rational(lo, 4), width = approximate_rational(hi - lo, 4);
  const double step = (hi - lo) / steps;
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; j <= steps; ++j) {
      RationalPoint x{base + width * Rational(i, steps), base + width * Rational(j, steps)};
      if (curve_distance(c, to_double(x[0]), to_double(x[1])) <= step) continue;
      if (maximizer_set(p, x).size() != 1) return fail("off-curve grid point with several maximizers");
    }
  return true;
}

/// Smallest |1 + r₁e^{iθ₁} + r₂e^{iθ₂}| over log-spaced r₁ in [1e-4, 1e4],
/// with the optimal r₂ >= r2_min in closed form.
inline double line_residual(double th1, double th2, double r2_min) {
  const std::complex<double> u1 = std::polar(1.0, th1), u2 = std::polar(1.0, th2);
  double best = std::numeric_limits<double>::infinity();
  for (int k = -40000; k <= 40000; ++k) {
    const double r1 = std::pow(10.0, k * 1e-4);
    const std::complex<double> a = 1.0 + r1 * u1;
    const double r2 = std::max(r2_min, -(a.real() * u2.real() + a.imag() * u2.imag()));
    best = std::min(best, std::abs(a + r2 * u2));
  }
  return best;
}

/// Solves r₁e^{iθ₁} + r₂e^{iθ₂} = -1 over the reals by Cramer's rule; the
/// open line coamoeba is where both solutions are positive.
inline bool line_open_by_cramer(double th1, double th2) {
  const double det = std::cos(th1) * std::sin(th2) - std::sin(th1) * std::cos(th2);
  if (std::abs(det) < 1e-12) return false;
  const double r1 = (-std::sin(th2)) / det;
  const double r2 = (std::sin(th1)) / det;
  return r1 > 0 && r2 > 0;
}

inline bool in_triangle(const Polygon& t, double x, double y) {
  auto side = [&](const Point2& a, const Point2& b) { return (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x); };
  const double s0 = side(t[0], t[1]), s1 = side(t[1], t[2]), s2 = side(t[2], t[0]);
  return (s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0);
}

/// Whether the torus point lies inside some 2π-translate of a triangle.
inline bool in_polygons(const std::vector<Polygon>& tris, double x, double y) {
  const double tau = 2 * 3.14159265358979323846;
  for (const auto& t : tris)
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j)
        if (in_triangle(t, x + i * tau, y + j * tau)) return true;
  return false;
}

}  // namespace oracles
