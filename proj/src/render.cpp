#include "cotrop/render.h"

#include "cotrop/error.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace cotrop {

namespace {

const char* const kPiece = "#4f7cac";
const char* const kCodual = "#c0392b";
const char* const kExternal = "#e08e45";
const char* const kInk = "#222222";
const char* const kFrame = "#999999";

void expect(const RenderSpec& spec, RenderTarget target) {
  spec.validate();
  if (spec.target != target)
    throw Error(ErrorCode::TargetMismatch, std::string("spec targets ") + to_string(spec.target) + ", data is " +
                                               to_string(target));
}

std::string header(const RenderSpec& spec) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
     << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height
     << "\" fill=\"#ffffff\" stroke=\"none\"/>\n";
  return os.str();
}

// Affine map from a data box to the viewport (y up).
struct View {
  double x0, y0, x1, y1;
  double w, h;
  double px(double x) const { return (x - x0) / (x1 - x0) * w; }
  double py(double y) const { return h - (y - y0) / (y1 - y0) * h; }
  std::string pt(double x, double y) const { return format_number(px(x)) + ' ' + format_number(py(y)); }
};

// Clip the segment p + s d, s ∈ [s0, s1], to the box; nullopt when empty.
std::optional<std::pair<double, double>> clip(double px, double py, double dx, double dy, double s0, double s1,
                                              const View& v) {
  auto edge = [&](double p, double d, double lo, double hi) {
    if (d == 0) return p >= lo && p <= hi;
    double a = (lo - p) / d, b = (hi - p) / d;
    if (a > b) std::swap(a, b);
    s0 = std::max(s0, a);
    s1 = std::min(s1, b);
    return true;
  };
  if (!edge(px, dx, v.x0, v.x1) || !edge(py, dy, v.y0, v.y1) || s0 >= s1) return std::nullopt;
  return std::make_pair(s0, s1);
}

std::string torus_frame(const View& v, int k) {
  std::ostringstream os;
  os << "<g stroke=\"" << kFrame << "\" stroke-width=\"0.75\" fill=\"none\">\n";
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      os << "<rect x=\"" << format_number(v.px(kTwoPi * i)) << "\" y=\"" << format_number(v.py(kTwoPi * (j + 1)))
         << "\" width=\"" << format_number(v.w / k) << "\" height=\"" << format_number(v.h / k) << "\"/>\n";
  os << "</g>\n";
  return os.str();
}

View torus_view(const RenderSpec& spec) {
  const double L = kTwoPi * spec.domains;
  return View{0, 0, L, L, static_cast<double>(spec.width), static_cast<double>(spec.height)};
}

}  // namespace

const char* to_string(RenderTarget target) {
  switch (target) {
    case RenderTarget::Newton: return "newton";
    case RenderTarget::TropicalCurve: return "tropical_curve";
    case RenderTarget::CoamoebaModel: return "coamoeba_model";
    case RenderTarget::Raster: return "raster";
  }
  return "?";
}

RenderTarget parse_render_target(const std::string& name) {
  for (auto t : {RenderTarget::Newton, RenderTarget::TropicalCurve, RenderTarget::CoamoebaModel, RenderTarget::Raster})
    if (name == to_string(t)) return t;
  throw Error(ErrorCode::InvalidArgument, "unknown render target '" + name + "'");
}

void RenderSpec::validate() const {
  if (width < 64 || width > 4096 || height < 64 || height > 4096)
    throw Error(ErrorCode::OutOfRange, "viewport sides must lie in [64, 4096]");
  if (domains < 1 || domains > 4) throw Error(ErrorCode::OutOfRange, "domains must lie in [1, 4]");
  if (!(line_width > 0)) throw Error(ErrorCode::OutOfRange, "line width must be positive");
}

std::string format_number(double x) {
  if (x == 0 || std::abs(x) < 5e-10) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// ---------------------------------------------------------------------------

std::string render_svg(const NewtonPolytope& poly, const RegularSubdivision& sub, const RenderSpec& spec) {
  expect(spec, RenderTarget::Newton);
  if (poly.dimension != 2) throw Error(ErrorCode::UnsupportedDimension, "Newton polygon rendering needs n = 2");
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool first = true;
  for (const auto& p : poly.support) {
    double x = static_cast<double>(p[0]), y = static_cast<double>(p[1]);
    if (first) {
      x0 = x1 = x;
      y0 = y1 = y;
      first = false;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  double span = std::max({x1 - x0, y1 - y0, 1.0});
  double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2, half = span * 0.6;
  View v{cx - half, cy - half, cx + half, cy + half, static_cast<double>(spec.width), static_cast<double>(spec.height)};

  std::ostringstream os;
  os << header(spec);
  os << "<g fill=\"#eef3f8\" stroke=\"" << kInk << "\" stroke-width=\"" << format_number(spec.line_width)
     << "\" stroke-linejoin=\"round\">\n";
  for (const auto& cell : sub.cells) {
    if (cell.vertices.size() < 2) continue;
    os << "<path class=\"cell\" d=\"";
    for (std::size_t i = 0; i < cell.vertices.size(); ++i)
      os << (i ? " L " : "M ") << v.pt(static_cast<double>(cell.vertices[i][0]), static_cast<double>(cell.vertices[i][1]));
    os << (cell.vertices.size() > 2 ? " Z" : "") << "\"/>\n";
  }
  os << "</g>\n<g fill=\"" << kInk << "\">\n";
  const double r = std::max(2.0, spec.line_width * 2);
  for (const auto& p : poly.support)
    os << "<circle class=\"support\" cx=\"" << format_number(v.px(static_cast<double>(p[0]))) << "\" cy=\""
       << format_number(v.py(static_cast<double>(p[1]))) << "\" r=\"" << format_number(r) << "\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_svg(const TropicalCurve& curve, const RenderSpec& spec) {
  expect(spec, RenderTarget::TropicalCurve);
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : curve.vertices) pts.push_back({to_double(p[0]), to_double(p[1])});
  for (const auto& l : curve.lines) pts.push_back({to_double(l.point[0]), to_double(l.point[1])});
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == 0) {
      x0 = x1 = pts[i].first;
      y0 = y1 = pts[i].second;
    }
    x0 = std::min(x0, pts[i].first);
    x1 = std::max(x1, pts[i].first);
    y0 = std::min(y0, pts[i].second);
    y1 = std::max(y1, pts[i].second);
  }
  double span = std::max({x1 - x0, y1 - y0, 1.0});
  double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2, half = span * 0.8;
  View v{cx - half, cy - half, cx + half, cy + half, static_cast<double>(spec.width), static_cast<double>(spec.height)};

  std::ostringstream os;
  os << header(spec);
  os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
        "orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 Z\" fill=\""
     << kInk << "\"/></marker></defs>\n";
  os << "<g stroke=\"" << kInk << "\" fill=\"none\" stroke-linecap=\"round\">\n";
  auto stroke = [&](std::int64_t weight) { return format_number(spec.line_width * static_cast<double>(weight)); };
  for (const auto& e : curve.edges) {
    const auto& a = curve.vertices[e.from];
    const auto& b = curve.vertices[e.to];
    os << "<path class=\"edge\" stroke-width=\"" << stroke(e.weight) << "\" d=\"M " << v.pt(to_double(a[0]), to_double(a[1]))
       << " L " << v.pt(to_double(b[0]), to_double(b[1])) << "\"/>\n";
  }
  for (const auto& ray : curve.rays) {
    const auto& a = curve.vertices[ray.base];
    double px = to_double(a[0]), py = to_double(a[1]);
    double dx = static_cast<double>(ray.direction[0]), dy = static_cast<double>(ray.direction[1]);
    auto s = clip(px, py, dx, dy, 0, 1e300, v);
    double end = s ? s->second : 0;
    os << "<path class=\"ray\" stroke-width=\"" << stroke(ray.weight) << "\" marker-end=\"url(#arrow)\" d=\"M "
       << v.pt(px, py) << " L " << v.pt(px + end * dx, py + end * dy) << "\"/>\n";
  }
  for (const auto& l : curve.lines) {
    double px = to_double(l.point[0]), py = to_double(l.point[1]);
    double dx = static_cast<double>(l.direction[0]), dy = static_cast<double>(l.direction[1]);
    auto s = clip(px, py, dx, dy, -1e300, 1e300, v);
    if (!s) continue;
    os << "<path class=\"line\" stroke-width=\"" << stroke(l.weight) << "\" d=\"M "
       << v.pt(px + s->first * dx, py + s->first * dy) << " L " << v.pt(px + s->second * dx, py + s->second * dy)
       << "\"/>\n";
  }
  os << "</g>\n<g fill=\"" << kInk << "\">\n";
  const double r = std::max(2.5, spec.line_width * 2);
  for (const auto& p : curve.vertices)
    os << "<circle class=\"vertex\" cx=\"" << format_number(v.px(to_double(p[0]))) << "\" cy=\""
       << format_number(v.py(to_double(p[1]))) << "\" r=\"" << format_number(r) << "\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_svg(const CoamoebaModel& model, const RenderSpec& spec) {
  expect(spec, RenderTarget::CoamoebaModel);
  const View v = torus_view(spec);
  const int k = spec.domains;
  std::ostringstream os;
  os << header(spec);
  os << "<g fill=\"" << kPiece << "\" fill-opacity=\"0.85\" stroke=\"none\">\n";
  for (const auto& piece : model.pieces) {
    for (const auto& tri : simplex_coamoeba_polygons_2d(piece)) {
      std::ostringstream d;
      double x0 = tri[0].x, x1 = x0, y0 = tri[0].y, y1 = y0;
      for (const auto& p : tri) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
      }
      const auto range = [&](double lo, double hi) {
        return std::make_pair(static_cast<int>(std::floor(-hi / kTwoPi)), static_cast<int>(std::ceil(k - lo / kTwoPi)));
      };
      const auto [i0, i1] = range(x0, x1);
      const auto [j0, j1] = range(y0, y1);
      for (int i = i0; i <= i1; ++i)
        for (int j = j0; j <= j1; ++j) {
          Polygon moved;
          for (const auto& p : tri) moved.push_back({p.x + kTwoPi * i, p.y + kTwoPi * j});
          Polygon part = clip_to_box(moved, 0, kTwoPi * k);
          if (part.empty()) continue;
          d << (d.tellp() > 0 ? " M " : "M ");
          for (std::size_t q = 0; q < part.size(); ++q) d << (q ? " L " : "") << v.pt(part[q].x, part[q].y);
          d << " Z";
        }
      os << "<path class=\"piece\" d=\"" << d.str() << "\"/>\n";
    }
  }
  os << "</g>\n";
  os << "<g fill=\"none\" stroke-width=\"" << format_number(spec.line_width) << "\">\n";
  for (const auto& line : model.codual_lines) {
    std::ostringstream d;
    const double nx = static_cast<double>(line.normal[0]), ny = static_cast<double>(line.normal[1]);
    const double L = kTwoPi * k;
    double lo = std::min({0.0, nx * L, ny * L, nx * L + ny * L}), hi = std::max({0.0, nx * L, ny * L, nx * L + ny * L});
    const double nn = nx * nx + ny * ny;
    for (auto m = static_cast<long>(std::ceil((lo - line.offset) / kTwoPi)); m <= static_cast<long>(std::floor((hi - line.offset) / kTwoPi)); ++m) {
      const double c = line.offset + kTwoPi * static_cast<double>(m);
      const double px = c * nx / nn, py = c * ny / nn;
      auto s = clip(px, py, -ny, nx, -1e300, 1e300, v);
      if (!s) continue;
      d << (d.tellp() > 0 ? " M " : "M ") << v.pt(px - s->first * ny, py + s->first * nx) << " L "
        << v.pt(px - s->second * ny, py + s->second * nx);
    }
    os << "<path class=\"codual\" stroke=\"" << (line.external ? kExternal : kCodual) << "\" d=\"" << d.str() << "\"/>\n";
  }
  os << "</g>\n" << torus_frame(v, k) << "</svg>\n";
  return os.str();
}

std::string render_svg(const TorusRaster& raster, const RenderSpec& spec) {
  expect(spec, RenderTarget::Raster);
  const View v = torus_view(spec);
  const int k = spec.domains, R = raster.size();
  const double cw = v.w / (k * R), ch = v.h / (k * R);
  std::ostringstream os;
  os << header(spec);
  os << "<g class=\"raster\" fill=\"" << kInk << "\" stroke=\"none\" shape-rendering=\"crispEdges\">\n";
  for (int di = 0; di < k; ++di)
    for (int dj = 0; dj < k; ++dj)
      for (int j = 0; j < R; ++j) {
        int i = 0;
        while (i < R) {
          if (!raster.at(i, j)) {
            ++i;
            continue;
          }
          int start = i;
          while (i < R && raster.at(i, j)) ++i;
          os << "<rect x=\"" << format_number((di * R + start) * cw) << "\" y=\""
             << format_number(v.h - (dj * R + j + 1) * ch) << "\" width=\"" << format_number((i - start) * cw)
             << "\" height=\"" << format_number(ch) << "\"/>\n";
        }
      }
  os << "</g>\n" << torus_frame(v, k) << "</svg>\n";
  return os.str();
}

}  // namespace cotrop
