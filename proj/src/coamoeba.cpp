#include "cotrop/coamoeba.h"

#include "cotrop/error.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace cotrop {

namespace {

constexpr double kLpEps = 1e-12;

double norm2(double x, double y) { return std::hypot(x, y); }

Point2 lerp(const Point2& a, const Point2& b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

// Keep the part of `poly` with sign * (coord - bound) >= 0, coord 0 = x, 1 = y.
Polygon clip_half_plane(const Polygon& poly, int coord, double bound, double sign) {
  Polygon out;
  if (poly.empty()) return out;
  auto value = [&](const Point2& p) { return sign * ((coord == 0 ? p.x : p.y) - bound); };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& cur = poly[i];
    const Point2& nxt = poly[(i + 1) % poly.size()];
    double vc = value(cur), vn = value(nxt);
    if (vc >= 0) out.push_back(cur);
    if ((vc >= 0) != (vn >= 0)) out.push_back(lerp(cur, nxt, vc / (vc - vn)));
  }
  return out;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t integer_determinant(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return static_cast<std::int64_t>(numerator(det));
}

}  // namespace

double wrap_pi(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  if (r > kPi) r -= kTwoPi;
  return r;
}

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    double d = std::abs(wrap_pi(a[i] - b[i]));
    s += d * d;
  }
  return std::sqrt(s);
}

double line_coamoeba_max_min_slack(const TorusPoint& theta) {
  const std::size_t n = theta.size();
  std::vector<double> ux(n), uy(n);
  double Ux = 0, Uy = 0;
  for (std::size_t j = 0; j < n; ++j) {
    ux[j] = std::cos(theta[j]);
    uy[j] = std::sin(theta[j]);
    Ux += ux[j];
    Uy += uy[j];
  }
  const double bx = -1, by = 0;
  double best = -std::numeric_limits<double>::infinity();
  auto solve2 = [](double a11, double a12, double a21, double a22, double r1, double r2, double& x1, double& x2) {
    double det = a11 * a22 - a12 * a21;
    double scale = std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22), 1.0});
    if (std::abs(det) <= 1e-14 * scale * scale) return false;
    x1 = (r1 * a22 - a12 * r2) / det;
    x2 = (a11 * r2 - a21 * r1) / det;
    return true;
  };
  // Basis {s, q_j}: (Σ u) s + u_j q_j = b.
  for (std::size_t j = 0; j < n; ++j) {
    double s, q;
    if (solve2(Ux, ux[j], Uy, uy[j], bx, by, s, q) && q >= -kLpEps && s <= 1 + kLpEps) best = std::max(best, std::min(s, 1.0));
  }
  // s alone.
  {
    double uu = Ux * Ux + Uy * Uy;
    if (uu > kLpEps) {
      double s = (Ux * bx + Uy * by) / uu;
      if (std::abs(Ux * by - Uy * bx) <= 1e-12 && s <= 1 + kLpEps) best = std::max(best, std::min(s, 1.0));
    }
  }
  // s = 1: Σ u + u_i q_i + u_j q_j = b.
  const double rx = bx - Ux, ry = by - Uy;
  if (std::abs(rx) <= kLpEps && std::abs(ry) <= kLpEps) best = std::max(best, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    // One free q.
    double cross = ux[i] * ry - uy[i] * rx;
    double dot = ux[i] * rx + uy[i] * ry;
    if (std::abs(cross) <= 1e-12 && dot >= -kLpEps) best = std::max(best, 1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      double qi, qj;
      if (solve2(ux[i], ux[j], uy[i], uy[j], rx, ry, qi, qj) && qi >= -kLpEps && qj >= -kLpEps) best = std::max(best, 1.0);
    }
  }
  return best;
}

bool line_coamoeba_membership(const TorusPoint& theta, bool closed) {
  if (theta.size() < 2) throw Error(ErrorCode::UnsupportedDimension, "line coamoeba needs n >= 2");
  if (theta.size() == 2) {
    double p1 = wrap_pi(theta[0] - kPi);
    double p2 = wrap_pi(theta[1] - kPi);
    if (closed) {
      // Closure: the two open triangles with their edges and vertices.
      double e = kAngleEps;
      bool a = p1 >= -e && p2 <= e && p1 - p2 <= kPi + e;
      bool b = p1 <= e && p2 >= -e && p2 - p1 <= kPi + e;
      return a || b;
    }
    return p1 * p2 < 0 && std::abs(p1) + std::abs(p2) < kPi;
  }
  double s = line_coamoeba_max_min_slack(theta);
  return closed ? s >= -kAngleEps : s > kAngleEps;
}

std::array<Polygon, 2> line_coamoeba_polygons() {
  return {Polygon{{kPi, 0}, {kTwoPi, kPi}, {kPi, kPi}}, Polygon{{0, kPi}, {kPi, kPi}, {kPi, kTwoPi}}};
}

double polygon_area(const Polygon& poly) {
  double a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

Polygon clip_to_box(const Polygon& poly, double lo, double hi) {
  Polygon out = clip_half_plane(poly, 0, lo, 1);
  out = clip_half_plane(out, 0, hi, -1);
  out = clip_half_plane(out, 1, lo, 1);
  out = clip_half_plane(out, 1, hi, -1);
  if (out.size() < 3 || std::abs(polygon_area(out)) <= 1e-15) return {};
  return out;
}

std::vector<Polygon> clip_to_fundamental_domain(const Polygon& poly) {
  std::vector<Polygon> out;
  if (poly.empty()) return out;
  double minx = poly[0].x, maxx = minx, miny = poly[0].y, maxy = miny;
  for (const auto& p : poly) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  for (auto i = static_cast<long>(std::floor(minx / kTwoPi)); i <= static_cast<long>(std::floor(maxx / kTwoPi)); ++i) {
    for (auto j = static_cast<long>(std::floor(miny / kTwoPi)); j <= static_cast<long>(std::floor(maxy / kTwoPi));
         ++j) {
      Polygon moved;
      for (const auto& p : poly) moved.push_back({p.x - kTwoPi * i, p.y - kTwoPi * j});
      moved = clip_to_box(moved, 0, kTwoPi);
      if (!moved.empty()) out.push_back(std::move(moved));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

TorusPoint SimplexCoamoeba::transport(const TorusPoint& theta) const {
  TorusPoint out(phases.size());
  for (std::size_t k = 0; k < matrix.size(); ++k) {
    double v = phases[k];
    for (std::size_t j = 0; j < matrix[k].size() && j < theta.size(); ++j)
      v += static_cast<double>(matrix[k][j]) * theta[j];
    out[k] = v;
  }
  return out;
}

bool SimplexCoamoeba::contains(const TorusPoint& theta, bool closed) const {
  if (dimension() == 1) {
    // 1 + a e^{i d θ} = 0 has a positive solution only where d θ + phase ≡ π.
    double r = wrap_pi(transport(theta)[0] - kPi);
    return closed && std::abs(r) <= kAngleEps;
  }
  return line_coamoeba_membership(transport(theta), closed);
}

SimplexCoamoeba simplex_coamoeba(const ComplexPolynomial& f) {
  const int n = f.dimension();
  if (static_cast<int>(f.terms().size()) != n + 1)
    throw Error(ErrorCode::NotMaximallySparse, "expected " + std::to_string(n + 1) + " terms, got " +
                                                   std::to_string(f.terms().size()));
  SimplexCoamoeba s;
  auto it = f.terms().begin();
  s.base = it->first;
  Complex a0 = it->second;
  std::vector<Complex> coeffs;
  for (++it; it != f.terms().end(); ++it) {
    LatticePoint row(n);
    for (int j = 0; j < n; ++j) row[j] = it->first[j] - s.base[j];
    s.matrix.push_back(row);
    s.others.push_back(it->first);
    coeffs.push_back(it->second);
  }
  s.determinant = integer_determinant(s.matrix);
  if (s.determinant == 0) throw Error(ErrorCode::NotMaximallySparse, "support is not the vertex set of a simplex");
  if (s.determinant < 0 && n >= 2) {
    std::swap(s.matrix[0], s.matrix[1]);
    std::swap(s.others[0], s.others[1]);
    std::swap(coeffs[0], coeffs[1]);
    s.determinant = -s.determinant;
  }
  for (const auto& c : coeffs) s.phases.push_back(normalize_angle(std::arg(c / a0)));
  return s;
}

SimplexCoamoeba simplex_coamoeba(const ComplexPolynomial& f, const Cell& cell) {
  const int n = f.dimension();
  if (cell.dimension != n || static_cast<int>(cell.vertices.size()) != n + 1)
    throw Error(ErrorCode::NotMaximallySparse, "cell is not a full-dimensional simplex");
  if (cell.support.size() != cell.vertices.size())
    throw Error(ErrorCode::NotMaximallySparse, "cell carries support points other than its vertices");
  ComplexPolynomial g(n);
  for (const auto& v : cell.vertices) {
    if (!f.contains(v)) throw Error(ErrorCode::InvalidArgument, "cell vertex " + to_string(v) + " not in support");
    g.set(v, f.coefficient(v));
  }
  return simplex_coamoeba(g);
}

SimplexCoamoeba simplex_coamoeba(const PolynomialOverSeries& f, const Cell& cell) {
  return simplex_coamoeba(leading_coefficients(f), cell);
}

std::vector<Polygon> simplex_coamoeba_polygons_2d(const SimplexCoamoeba& s) {
  if (s.dimension() != 2) throw Error(ErrorCode::UnsupportedDimension, "polygons need n = 2");
  const std::int64_t d = s.determinant;
  const auto& T = s.matrix;
  // adj(T) = [[t11, -t01], [-t10, t00]].
  const std::int64_t adj[2][2] = {{T[1][1], -T[0][1]}, {-T[1][0], T[0][0]}};
  std::vector<std::array<std::int64_t, 2>> reps;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::int64_t k0 = 0; k0 < d && static_cast<std::int64_t>(reps.size()) < d; ++k0) {
    for (std::int64_t k1 = 0; k1 < d && static_cast<std::int64_t>(reps.size()) < d; ++k1) {
      auto key = std::make_pair(mod_floor(adj[0][0] * k0 + adj[0][1] * k1, d), mod_floor(adj[1][0] * k0 + adj[1][1] * k1, d));
      if (seen.insert(key).second) reps.push_back({k0, k1});
    }
  }
  std::vector<Polygon> out;
  const double dd = static_cast<double>(d);
  for (const auto& tri : line_coamoeba_polygons()) {
    for (const auto& k : reps) {
      Polygon poly;
      for (const auto& y : tri) {
        double r0 = y.x - s.phases[0] + kTwoPi * static_cast<double>(k[0]);
        double r1 = y.y - s.phases[1] + kTwoPi * static_cast<double>(k[1]);
        poly.push_back({(adj[0][0] * r0 + adj[0][1] * r1) / dd, (adj[1][0] * r0 + adj[1][1] * r1) / dd});
      }
      double cx = (poly[0].x + poly[1].x + poly[2].x) / 3;
      double cy = (poly[0].y + poly[1].y + poly[2].y) / 3;
      double sx = kTwoPi * std::floor(cx / kTwoPi), sy = kTwoPi * std::floor(cy / kTwoPi);
      for (auto& p : poly) {
        p.x -= sx;
        p.y -= sy;
      }
      out.push_back(std::move(poly));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

double CodualHyperplane::residual(const TorusPoint& x) const {
  double v = -offset;
  for (std::size_t j = 0; j < normal.size() && j < x.size(); ++j) v += static_cast<double>(normal[j]) * x[j];
  return wrap_pi(v);
}

bool CodualHyperplane::contains(const TorusPoint& x, double eps) const { return std::abs(residual(x)) <= eps; }

std::int64_t CodualHyperplane::circle_count() const {
  std::int64_t g = 0;
  for (auto c : normal) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

namespace {

struct CircleFrame {
  double p0x, p0y;  // base point
  double tx, ty;    // primitive lattice direction
  double nx, ny;    // primitive normal
};

CircleFrame frame(const CodualHyperplane& h, std::size_t circle) {
  if (h.normal.size() != 2) throw Error(ErrorCode::UnsupportedDimension, "codual circles need n = 2");
  const std::int64_t g = h.circle_count();
  if (g == 0) throw Error(ErrorCode::InvalidEdge, "degenerate codual normal");
  CircleFrame f{};
  f.nx = static_cast<double>(h.normal[0] / g);
  f.ny = static_cast<double>(h.normal[1] / g);
  double c = (h.offset + kTwoPi * static_cast<double>(circle)) / static_cast<double>(g);
  double nn = f.nx * f.nx + f.ny * f.ny;
  f.p0x = c * f.nx / nn;
  f.p0y = c * f.ny / nn;
  f.tx = -f.ny;
  f.ty = f.nx;
  return f;
}

}  // namespace

TorusPoint CodualHyperplane::point_at(std::size_t circle, double s) const {
  CircleFrame f = frame(*this, circle);
  return {normalize_angle(f.p0x + kTwoPi * s * f.tx), normalize_angle(f.p0y + kTwoPi * s * f.ty)};
}

double CodualHyperplane::circle_length() const {
  CircleFrame f = frame(*this, 0);
  return kTwoPi * norm2(f.tx, f.ty);
}

std::vector<double> CodualHyperplane::crossings(std::size_t circle, const CodualHyperplane& other) const {
  CircleFrame f = frame(*this, circle);
  double D = static_cast<double>(other.normal[0]) * f.tx + static_cast<double>(other.normal[1]) * f.ty;
  std::vector<double> out;
  if (D == 0) return out;
  double g0 = static_cast<double>(other.normal[0]) * f.p0x + static_cast<double>(other.normal[1]) * f.p0y - other.offset;
  double lo = std::min(g0, g0 + kTwoPi * D), hi = std::max(g0, g0 + kTwoPi * D);
  for (auto k = static_cast<long>(std::ceil(lo / kTwoPi)); k <= static_cast<long>(std::floor(hi / kTwoPi)); ++k) {
    double s = (kTwoPi * static_cast<double>(k) - g0) / (kTwoPi * D);
    if (s >= 0 && s < 1) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }), out.end());
  return out;
}

CodualHyperplane codual_hyperplane(const LatticePoint& alpha, double arg_alpha, const LatticePoint& beta,
                                   double arg_beta, bool external) {
  if (alpha.size() != beta.size()) throw Error(ErrorCode::SizeMismatch, "edge endpoints differ in dimension");
  CodualHyperplane h;
  h.alpha = alpha;
  h.beta = beta;
  h.external = external;
  h.normal.resize(alpha.size());
  bool zero = true;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    h.normal[j] = alpha[j] - beta[j];
    zero = zero && h.normal[j] == 0;
  }
  if (zero) throw Error(ErrorCode::InvalidEdge, "edge endpoints coincide");
  h.offset = normalize_angle(kPi - arg_alpha + arg_beta);
  return h;
}

std::vector<CodualHyperplane> codual_hyperplanes(const ComplexPolynomial& f, const RegularSubdivision& sub) {
  if (f.dimension() != 2 || sub.cell_dimension != 2)
    throw Error(ErrorCode::UnsupportedDimension, "codual lines need a full-dimensional planar subdivision");
  std::vector<CodualHyperplane> out;
  for (const auto& e : sub.edges) {
    if (!f.contains(e.a) || !f.contains(e.b))
      throw Error(ErrorCode::InvalidEdge, "edge " + to_string(e.a) + "-" + to_string(e.b) + " not in support");
    out.push_back(codual_hyperplane(e.a, std::arg(f.coefficient(e.a)), e.b, std::arg(f.coefficient(e.b)), e.boundary));
  }
  return out;
}

std::vector<CodualHyperplane> codual_hyperplanes(const PolynomialOverSeries& f, const RegularSubdivision& sub) {
  return codual_hyperplanes(leading_coefficients(f), sub);
}

// ---------------------------------------------------------------------------

bool CoamoebaModel::contains(const TorusPoint& theta, bool closed) const {
  for (const auto& p : pieces)
    if (p.contains(theta, closed)) return true;
  return false;
}

CoamoebaModel glue_coamoeba(const ComplexPolynomial& f, const RegularSubdivision& sub) {
  if (f.dimension() != 2 || sub.cell_dimension != 2)
    throw Error(ErrorCode::UnsupportedDimension, "gluing needs a full-dimensional planar subdivision");
  if (!sub.triangulation) throw Error(ErrorCode::NotTriangulation, "subdivision is not a triangulation");
  CoamoebaModel m;
  m.dimension = 2;
  for (const auto& cell : sub.cells) {
    if (cell.support.size() != cell.vertices.size())
      throw Error(ErrorCode::UnsupportedCell, "cell with vertex " + to_string(cell.vertices.front()) +
                                                  " carries non-vertex support points");
    m.pieces.push_back(simplex_coamoeba(f, cell));
  }
  m.codual_lines = codual_hyperplanes(f, sub);
  return m;
}

CoamoebaModel glue_coamoeba(const PolynomialOverSeries& f, const RegularSubdivision& sub) {
  return glue_coamoeba(leading_coefficients(f), sub);
}

const char* to_string(LocalizationLabel label) {
  return label == LocalizationLabel::FullDim ? "FULL_DIM" : "DISCRETE";
}

std::vector<LocalizationComponent> classify_localization(const CoamoebaModel& model, const CodualHyperplane& line,
                                                         int resolution) {
  if (resolution < 256) throw Error(ErrorCode::IllegalResolution, "resolution must be at least 256");
  const std::int64_t circles = line.circle_count();
  const auto res = static_cast<std::size_t>(resolution);
  const double step = line.circle_length() / resolution;
  const double delta = 2 * step;
  std::vector<LocalizationComponent> out;
  for (std::size_t c = 0; c < static_cast<std::size_t>(circles); ++c) {
    CircleFrame f = frame(line, c);
    double nl = norm2(f.nx, f.ny);
    double ux = f.nx / nl, uy = f.ny / nl, vx = f.tx / nl, vy = f.ty / nl;
    std::vector<char> two(res, 0);
    for (std::size_t i = 0; i < res; ++i) {
      TorusPoint x = line.point_at(c, static_cast<double>(i) / resolution);
      bool side[2] = {false, false};
      for (int sgn = 0; sgn < 2; ++sgn) {
        double sign = sgn == 0 ? 1.0 : -1.0;
        for (double rho : {delta / 4, delta / 2, delta}) {
          for (double eta : {-delta / 2, 0.0, delta / 2}) {
            TorusPoint p{x[0] + sign * rho * ux + eta * vx, x[1] + sign * rho * uy + eta * vy};
            if (model.contains(p, false)) {
              side[sgn] = true;
              break;
            }
          }
          if (side[sgn]) break;
        }
      }
      two[i] = side[0] && side[1];
    }
    auto make = [&](std::size_t first, std::size_t count, bool whole) {
      LocalizationComponent comp;
      comp.circle = c;
      comp.samples = count;
      comp.start = static_cast<double>(first) / resolution;
      comp.end = static_cast<double>(first + count - 1) / resolution;
      bool full = whole || static_cast<double>(count - 1) * step > 4 * delta;
      comp.label = full ? LocalizationLabel::FullDim : LocalizationLabel::Discrete;
      double mid = (static_cast<double>(first) + static_cast<double>(count - 1) / 2) / resolution;
      comp.midpoint = line.point_at(c, mid - std::floor(mid));
      out.push_back(comp);
    };
    auto gap = std::find(two.begin(), two.end(), 0);
    if (gap == two.end()) {
      make(0, res, true);
      continue;
    }
    std::size_t g0 = static_cast<std::size_t>(gap - two.begin());
    std::size_t i = 0;
    while (i < res) {
      std::size_t idx = (g0 + 1 + i) % res;
      if (!two[idx]) {
        ++i;
        continue;
      }
      std::size_t first = g0 + 1 + i, count = 0;
      while (i < res && two[(g0 + 1 + i) % res]) {
        ++count;
        ++i;
      }
      make(first % res, count, false);
    }
  }
  return out;
}

double distance_to_codual_crossing(const CoamoebaModel& model, const CodualHyperplane& line,
                                   const LocalizationComponent& component) {
  double mid = (component.start + component.end) / 2;
  mid -= std::floor(mid);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& other : model.codual_lines) {
    if (other.alpha == line.alpha && other.beta == line.beta) continue;
    for (double s : line.crossings(component.circle, other)) {
      double d = std::abs(s - mid);
      d = std::min(d, 1 - d);
      best = std::min(best, d * line.circle_length());
    }
  }
  return best;
}

}  // namespace cotrop
