#include "cotrop/newton.h"

#include "cotrop/error.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace cotrop {

namespace {

using i128 = __int128;

i128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<i128>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<i128>(a[1] - o[1]) * (b[0] - o[0]);
}

LatticePoint diff_point(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

void sort_unique(std::vector<LatticePoint>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Andrew's monotone chain; strict turns only, so collinear points are dropped.
// Input sorted and unique, at least 3 points, not all collinear.
std::vector<LatticePoint> hull_ccw(const std::vector<LatticePoint>& pts) {
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

bool all_collinear(const std::vector<LatticePoint>& pts) {
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (cross(pts[0], pts[1], pts[i]) != 0) return false;
  }
  return true;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Extreme points of a 3D point set (sorted, unique).
std::vector<LatticePoint> extreme_points_3d(const std::vector<LatticePoint>& pts) {
  struct Vec3 {
    i128 x, y, z;
  };
  auto diff = [](const LatticePoint& a, const LatticePoint& b) {
    return Vec3{static_cast<i128>(a[0] - b[0]), static_cast<i128>(a[1] - b[1]), static_cast<i128>(a[2] - b[2])};
  };
  auto cross3 = [](const Vec3& a, const Vec3& b) {
    return Vec3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  };
  auto dot3 = [](const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; };
  const std::size_t n = pts.size();

  // Affine rank.
  int rank = 0;
  Vec3 line{0, 0, 0}, normal{0, 0, 0};
  for (std::size_t i = 1; i < n && rank < 1; ++i) {
    line = diff(pts[i], pts[0]);
    rank = 1;
  }
  if (rank == 0) return pts;
  for (std::size_t i = 1; i < n; ++i) {
    Vec3 c = cross3(line, diff(pts[i], pts[0]));
    if (c.x != 0 || c.y != 0 || c.z != 0) {
      normal = c;
      rank = 2;
      break;
    }
  }
  if (rank == 2) {
    for (std::size_t i = 1; i < n; ++i) {
      if (dot3(normal, diff(pts[i], pts[0])) != 0) {
        rank = 3;
        break;
      }
    }
  }

  if (rank < 3) {
    // Drop a coordinate along which the projection stays injective.
    int drop = 0;
    if (rank == 2) {
      drop = normal.z != 0 ? 2 : (normal.y != 0 ? 1 : 0);
    } else {
      drop = line.z == 0 ? 2 : (line.y == 0 ? 1 : (line.x == 0 ? 0 : 2));
    }
    std::vector<LatticePoint> proj;
    std::map<LatticePoint, LatticePoint> back;
    for (const auto& p : pts) {
      LatticePoint q;
      for (int c = 0; c < 3; ++c) {
        if (c != drop) q.push_back(p[c]);
      }
      back[q] = p;
      proj.push_back(q);
    }
    sort_unique(proj);
    std::vector<LatticePoint> ext;
    if (all_collinear(proj)) {
      ext = {proj.front(), proj.back()};
    } else {
      ext = hull_ccw(proj);
    }
    std::vector<LatticePoint> out;
    for (const auto& q : ext) out.push_back(back[q]);
    sort_unique(out);
    return out;
  }

  // Facet planes through point triples with all points on one side.
  std::vector<std::vector<Vec3>> normals_at(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec3 nv = cross3(diff(pts[j], pts[i]), diff(pts[k], pts[i]));
        if (nv.x == 0 && nv.y == 0 && nv.z == 0) continue;
        bool pos = false, neg = false;
        std::vector<std::size_t> on;
        for (std::size_t m = 0; m < n; ++m) {
          i128 s = dot3(nv, diff(pts[m], pts[i]));
          if (s > 0) pos = true;
          if (s < 0) neg = true;
          if (s == 0) on.push_back(m);
        }
        if (pos && neg) continue;
        for (auto m : on) normals_at[m].push_back(nv);
      }
    }
  }
  std::vector<LatticePoint> out;
  for (std::size_t m = 0; m < n; ++m) {
    const auto& ns = normals_at[m];
    bool full = false;
    for (std::size_t a = 0; a < ns.size() && !full; ++a) {
      for (std::size_t b = a + 1; b < ns.size() && !full; ++b) {
        Vec3 c = cross3(ns[a], ns[b]);
        if (c.x == 0 && c.y == 0 && c.z == 0) continue;
        for (std::size_t d = b + 1; d < ns.size(); ++d) {
          if (dot3(c, ns[d]) != 0) {
            full = true;
            break;
          }
        }
      }
    }
    if (full) out.push_back(pts[m]);
  }
  return out;
}

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

// Heights scaled to integers by the common denominator.
struct ScaledLift {
  std::vector<LatticePoint> points;
  std::vector<BigInt> heights;
  BigInt denominator = 1;
};

ScaledLift scale(const LiftedPointSet& lift) {
  ScaledLift s;
  for (const auto& [p, h] : lift) s.denominator = lcm_big(s.denominator, boost::multiprecision::denominator(h));
  for (const auto& [p, h] : lift) {
    s.points.push_back(p);
    s.heights.push_back(boost::multiprecision::numerator(h) * (s.denominator / boost::multiprecision::denominator(h)));
  }
  return s;
}

RegularSubdivision one_dimensional(const LiftedPointSet& lift, int ambient) {
  RegularSubdivision sub;
  sub.dimension = ambient;
  std::vector<LatticePoint> pts;
  std::vector<Rational> hs;
  for (const auto& [p, h] : lift) {
    pts.push_back(p);
    hs.push_back(h);
  }
  if (pts.size() == 1) {
    sub.cell_dimension = 0;
    Cell c;
    c.dimension = 0;
    c.vertices = pts;
    c.support = pts;
    c.slope = RationalPoint(ambient, Rational(0));
    c.offset = hs[0];
    sub.cells.push_back(c);
    sub.triangulation = true;
    return sub;
  }
  sub.cell_dimension = 1;
  // Primitive direction of the line carrying the support.
  LatticePoint d = diff_point(pts.back(), pts.front());
  std::int64_t g = 0;
  for (auto x : d) g = gcd64(g, x);
  for (auto& x : d) x /= g;
  std::int64_t dd = 0;
  for (auto x : d) dd += x * x;
  std::vector<std::int64_t> k(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    LatticePoint off = diff_point(pts[i], pts.front());
    std::int64_t dot = 0;
    for (std::size_t c = 0; c < d.size(); ++c) dot += off[c] * d[c];
    k[i] = dot / dd;
  }
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return k[a] < k[b]; });
  // Lower hull of (k, h).
  std::vector<std::size_t> hull;
  for (auto i : order) {
    while (hull.size() >= 2) {
      auto a = hull[hull.size() - 2], b = hull.back();
      // Remove b if it is on or above segment a-i.
      Rational lhs = (hs[b] - hs[a]) * Rational(k[i] - k[a]);
      Rational rhs = (hs[i] - hs[a]) * Rational(k[b] - k[a]);
      if (lhs >= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  bool simplices = true;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    auto a = hull[h], b = hull[h + 1];
    Rational slope = (hs[b] - hs[a]) / Rational(k[b] - k[a]);
    Cell c;
    c.dimension = 1;
    c.vertices = {pts[a], pts[b]};
    for (auto i : order) {
      if (k[i] >= k[a] && k[i] <= k[b] && hs[i] == hs[a] + slope * Rational(k[i] - k[a])) c.support.push_back(pts[i]);
    }
    std::sort(c.support.begin(), c.support.end());
    if (c.support.size() != 2) simplices = false;
    c.slope.resize(ambient);
    for (int j = 0; j < ambient; ++j) c.slope[j] = slope * Rational(d[j]) / Rational(dd);
    Rational at_origin = 0;
    for (int j = 0; j < ambient; ++j) at_origin += c.slope[j] * Rational(pts[a][j]);
    c.offset = hs[a] - at_origin;
    sub.cells.push_back(std::move(c));
  }
  sub.triangulation = simplices;
  return sub;
}

}  // namespace

Rational Cell::height_at(const LatticePoint& alpha) const {
  Rational h = offset;
  for (std::size_t j = 0; j < slope.size(); ++j) h += slope[j] * Rational(alpha[j]);
  return h;
}

NewtonPolytope convex_hull(std::vector<LatticePoint> support) {
  if (support.empty()) throw Error(ErrorCode::InvalidArgument, "empty support");
  const int n = static_cast<int>(support.front().size());
  if (n < 1 || n > 3) throw Error(ErrorCode::UnsupportedDimension, "convex_hull supports n in {1,2,3}, got " + std::to_string(n));
  for (const auto& p : support) {
    if (static_cast<int>(p.size()) != n) throw Error(ErrorCode::InvalidArgument, "mixed dimensions in support");
  }
  sort_unique(support);
  NewtonPolytope poly;
  poly.dimension = n;
  poly.support = support;
  if (support.size() == 1) {
    poly.vertices = support;
    return poly;
  }
  if (n == 1) {
    poly.affine_dimension = 1;
    poly.vertices = {support.front(), support.back()};
    return poly;
  }
  if (n == 2) {
    if (all_collinear(support)) {
      poly.affine_dimension = 1;
      poly.vertices = {support.front(), support.back()};
      return poly;
    }
    poly.affine_dimension = 2;
    poly.boundary = hull_ccw(support);
    poly.vertices = poly.boundary;
    std::sort(poly.vertices.begin(), poly.vertices.end());
    return poly;
  }
  poly.vertices = extreme_points_3d(support);
  poly.affine_dimension = poly.vertices.size() == 2 ? 1 : (poly.vertices.size() == 1 ? 0 : 3);
  return poly;
}

RegularSubdivision lower_hull_subdivision(const LiftedPointSet& lift) {
  if (lift.empty()) throw Error(ErrorCode::InvalidArgument, "empty lift");
  const int n = static_cast<int>(lift.begin()->first.size());
  if (n < 1 || n > 2) throw Error(ErrorCode::UnsupportedDimension, "subdivisions support n in {1,2}, got " + std::to_string(n));
  for (const auto& [p, _] : lift) {
    if (static_cast<int>(p.size()) != n) throw Error(ErrorCode::InvalidArgument, "mixed dimensions in lift");
  }
  std::vector<LatticePoint> pts;
  for (const auto& [p, _] : lift) pts.push_back(p);
  if (n == 1 || pts.size() < 3 || all_collinear(pts)) return one_dimensional(lift, n);

  const ScaledLift s = scale(lift);
  const std::size_t N = s.points.size();
  struct Facet {
    std::vector<std::size_t> contact;
    std::vector<char> member;
    BigInt nx, ny, nz;
    std::size_t base;
  };
  std::vector<Facet> facets;

  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      for (std::size_t k = j + 1; k < N; ++k) {
        i128 c = cross(s.points[i], s.points[j], s.points[k]);
        if (c == 0) continue;
        bool known = false;
        for (const auto& f : facets) {
          if (f.member[i] && f.member[j] && f.member[k]) {
            known = true;
            break;
          }
        }
        if (known) continue;
        const BigInt ax = s.points[j][0] - s.points[i][0], ay = s.points[j][1] - s.points[i][1];
        const BigInt bx = s.points[k][0] - s.points[i][0], by = s.points[k][1] - s.points[i][1];
        const BigInt ah = s.heights[j] - s.heights[i], bh = s.heights[k] - s.heights[i];
        BigInt nx = ay * bh - ah * by;
        BigInt ny = ah * bx - ax * bh;
        BigInt nz = ax * by - ay * bx;
        if (nz < 0) {
          nx = -nx;
          ny = -ny;
          nz = -nz;
        }
        bool lower = true;
        std::vector<std::size_t> contact;
        for (std::size_t m = 0; m < N && lower; ++m) {
          BigInt dot = nx * (s.points[m][0] - s.points[i][0]) + ny * (s.points[m][1] - s.points[i][1]) +
                       nz * (s.heights[m] - s.heights[i]);
          if (dot < 0) lower = false;
          if (dot == 0) contact.push_back(m);
        }
        if (!lower) continue;
        Facet f;
        f.member.assign(N, 0);
        for (auto m : contact) f.member[m] = 1;
        f.contact = std::move(contact);
        f.nx = nx;
        f.ny = ny;
        f.nz = nz;
        f.base = i;
        facets.push_back(std::move(f));
      }
    }
  }

  RegularSubdivision sub;
  sub.dimension = 2;
  sub.cell_dimension = 2;
  bool simplices = true;
  for (const auto& f : facets) {
    Cell c;
    c.dimension = 2;
    for (auto m : f.contact) c.support.push_back(s.points[m]);
    std::sort(c.support.begin(), c.support.end());
    c.vertices = hull_ccw(c.support);
    // h(x) = H_base/D - (nx (x - p) + ny (y - q)) / (nz D)
    const Rational D(s.denominator);
    const Rational scale_factor = Rational(1) / (Rational(f.nz) * D);
    c.slope = {-Rational(f.nx) * scale_factor, -Rational(f.ny) * scale_factor};
    const auto& p = s.points[f.base];
    c.offset = Rational(s.heights[f.base]) / D + (Rational(f.nx) * p[0] + Rational(f.ny) * p[1]) * scale_factor;
    if (c.vertices.size() != 3 || c.support.size() != 3) simplices = false;
    sub.cells.push_back(std::move(c));
  }
  // Deterministic cell order.
  std::sort(sub.cells.begin(), sub.cells.end(), [](const Cell& a, const Cell& b) {
    std::vector<LatticePoint> va = a.vertices, vb = b.vertices;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    return va < vb;
  });
  std::map<std::pair<LatticePoint, LatticePoint>, std::vector<std::size_t>> edge_cells;
  for (std::size_t ci = 0; ci < sub.cells.size(); ++ci) {
    const auto& v = sub.cells[ci].vertices;
    for (std::size_t e = 0; e < v.size(); ++e) {
      const auto& a = v[e];
      const auto& b = v[(e + 1) % v.size()];
      edge_cells[std::minmax(a, b)].push_back(ci);
    }
  }
  for (auto& [ab, cells] : edge_cells) {
    SubdivisionEdge e;
    e.a = ab.first;
    e.b = ab.second;
    e.cells = cells;
    e.boundary = cells.size() == 1;
    sub.edges.push_back(std::move(e));
  }
  sub.triangulation = simplices;
  return sub;
}

bool is_triangulation(const RegularSubdivision& sub) {
  for (const auto& c : sub.cells) {
    if (c.dimension == 2 && (c.vertices.size() != 3 || c.support.size() != 3)) return false;
    if (c.dimension == 1 && c.support.size() != 2) return false;
  }
  return true;
}

Rational perturbation_bound() { return Rational(1, BigInt(1) << 20); }

LiftedPointSet perturb_to_triangulation(const LiftedPointSet& lift, std::uint64_t seed) {
  if (is_triangulation(lower_hull_subdivision(lift))) return lift;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(0, std::int64_t(1) << 20);
  const BigInt den = BigInt(1) << 40;
  for (int attempt = 0; attempt < 256; ++attempt) {
    LiftedPointSet out;
    for (const auto& [p, h] : lift) out[p] = h + Rational(BigInt(draw(rng)), den);
    if (is_triangulation(lower_hull_subdivision(out))) return out;
  }
  throw Error(ErrorCode::InvalidArgument, "no triangulating perturbation found");
}

bool cell_contains(const Cell& cell, const LatticePoint& alpha) {
  const auto& v = cell.vertices;
  if (v.empty()) return false;
  if (alpha.size() != v.front().size()) return false;
  if (cell.dimension == 0) return alpha == v.front();
  if (cell.dimension == 1) {
    const LatticePoint d = diff_point(v[1], v[0]);
    const LatticePoint o = diff_point(alpha, v[0]);
    // collinear and between
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (static_cast<i128>(d[i]) * o[j] - static_cast<i128>(d[j]) * o[i] != 0) return false;
      }
    }
    i128 dot = 0, len = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      dot += static_cast<i128>(d[i]) * o[i];
      len += static_cast<i128>(d[i]) * d[i];
    }
    return dot >= 0 && dot <= len;
  }
  for (std::size_t e = 0; e < v.size(); ++e) {
    if (cross(v[e], v[(e + 1) % v.size()], alpha) < 0) return false;
  }
  return true;
}

PolynomialOverSeries truncate(const PolynomialOverSeries& f, const Cell& cell) {
  PolynomialOverSeries out(f.dimension());
  for (const auto& [alpha, a] : f.terms()) {
    if (cell_contains(cell, alpha)) out.set(alpha, a);
  }
  if (out.terms().empty()) throw Error(ErrorCode::EmptyTruncation, "no term of f lies in the cell");
  return out;
}

LiftedPointSet lift_of(const PolynomialOverSeries& f) {
  LiftedPointSet lift;
  for (const auto& [alpha, a] : f.terms()) lift[alpha] = order(a);
  return lift;
}

LiftedPointSet spine_lift(const ComplexPolynomial& f) {
  LiftedPointSet lift;
  for (const auto& [alpha, a] : f.terms()) lift[alpha] = approximate_rational(-std::log(std::abs(a)));
  return lift;
}

Rational polygon_area(const std::vector<LatticePoint>& ccw) {
  i128 twice = 0;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const auto& a = ccw[i];
    const auto& b = ccw[(i + 1) % ccw.size()];
    twice += static_cast<i128>(a[0]) * b[1] - static_cast<i128>(b[0]) * a[1];
  }
  return Rational(BigInt(static_cast<long long>(twice)), BigInt(2));
}

std::int64_t lattice_length(const LatticePoint& a, const LatticePoint& b) {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) g = gcd64(g, a[i] - b[i]);
  return g;
}

}  // namespace cotrop
