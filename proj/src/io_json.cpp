#include "cotrop/io_json.h"

#include "cotrop/error.h"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace cotrop {

namespace {

constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 31;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

LatticePoint lattice_from_json(const Json& j, int n) {
  if (!j.is_array() || (n >= 0 && static_cast<int>(j.size()) != n))
    parse_error("exponent must be an array of " + std::to_string(n) + " integers");
  LatticePoint p;
  for (const auto& c : j) {
    if (!c.is_number_integer()) parse_error("exponent entries must be integers");
    auto v = c.get<std::int64_t>();
    if (v >= kCoordinateBound || v <= -kCoordinateBound) throw Error(ErrorCode::OutOfRange, "exponent entry too large");
    p.push_back(v);
  }
  return p;
}

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  parse_error("rational values are \"p/q\" strings or integers");
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  parse_error("complex values are [re, im] pairs");
}

Json rational_point_json(const RationalPoint& p) {
  Json a = Json::array();
  for (const auto& q : p) a.push_back(rational_json(q));
  return a;
}

RationalPoint rational_point_from_json(const Json& j) {
  if (!j.is_array()) parse_error("point must be an array");
  RationalPoint p;
  for (const auto& c : j) p.push_back(rational_from_json(c));
  return p;
}

template <class T>
T checked(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

PuiseuxSeries series_from_json(const Json& j) {
  if (!j.is_array()) parse_error("Puiseux coefficient must be an array of terms");
  std::vector<SeriesTerm> terms;
  for (const auto& t : j) {
    if (t.is_object() && t.contains("exp")) {
      const Json& im = t.contains("im") ? t.at("im") : Json(0.0);
      if (!field(t, "re").is_number() || !im.is_number()) parse_error("series term re/im must be numbers");
      terms.push_back({rational_from_json(t.at("exp")), Complex(t.at("re").get<double>(), im.get<double>())});
    } else {
      terms.push_back({rational_from_json(field(t, "exponent")), complex_from_json(field(t, "coefficient"))});
    }
  }
  return PuiseuxSeries(terms);
}

Json to_json(const PuiseuxSeries& a) {
  Json arr = Json::array();
  for (const auto& t : a.terms())
    arr.push_back({{"exp", rational_json(t.exponent)}, {"re", t.coefficient.real()}, {"im", t.coefficient.imag()}});
  return arr;
}

PolynomialDocument parse_polynomial_document(const Json& j) {
  PolynomialDocument doc;
  doc.variables = checked<int>(j, "variables");
  if (doc.variables < 1) parse_error("variables must be positive");
  const std::string kind = checked<std::string>(j, "field");
  if (kind != "complex" && kind != "puiseux") parse_error("field must be \"complex\" or \"puiseux\"");
  doc.puiseux = kind == "puiseux";
  doc.series = PolynomialOverSeries(doc.variables);
  doc.complex = ComplexPolynomial(doc.variables);
  const Json& terms = field(j, "terms");
  if (!terms.is_array() || terms.empty()) parse_error("terms must be a nonempty array");
  for (const auto& t : terms) {
    LatticePoint alpha = lattice_from_json(field(t, "exponent"), doc.variables);
    if (doc.series.contains(alpha)) parse_error("duplicate exponent " + to_string(alpha));
    doc.order.push_back(alpha);
    if (doc.puiseux) {
      doc.series.set(alpha, series_from_json(field(t, "coefficient")));
    } else {
      Complex c = complex_from_json(field(t, "coefficient"));
      doc.complex.set(alpha, c);
      doc.series.set(alpha, PuiseuxSeries::constant(c));
    }
  }
  if (doc.puiseux) doc.complex = leading_coefficients(doc.series);
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << content;
}

PolynomialDocument read_polynomial_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(e.what());
  }
  return parse_polynomial_document(j);
}

Json to_json(const ComplexPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [alpha, a] : f.terms()) terms.push_back({{"exponent", alpha}, {"coefficient", complex_json(a)}});
  return {{"variables", f.dimension()}, {"field", "complex"}, {"terms", terms}};
}

Json to_json(const PolynomialOverSeries& f) {
  Json terms = Json::array();
  for (const auto& [alpha, a] : f.terms()) terms.push_back({{"exponent", alpha}, {"coefficient", to_json(a)}});
  return {{"variables", f.dimension()}, {"field", "puiseux"}, {"terms", terms}};
}

// ---------------------------------------------------------------------------

Json to_json(const RegularSubdivision& sub) {
  std::map<LatticePoint, std::size_t> index;
  for (const auto& c : sub.cells)
    for (const auto& p : c.support) index.emplace(p, 0);
  for (const auto& e : sub.edges) {
    index.emplace(e.a, 0);
    index.emplace(e.b, 0);
  }
  Json points = Json::array();
  for (auto& [p, k] : index) {
    k = points.size();
    points.push_back(p);
  }
  auto ids = [&](const std::vector<LatticePoint>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(index.at(p));
    return a;
  };
  Json cells = Json::array();
  for (const auto& c : sub.cells)
    cells.push_back({{"dimension", c.dimension},
                     {"vertices", ids(c.vertices)},
                     {"support", ids(c.support)},
                     {"slope", rational_point_json(c.slope)},
                     {"offset", rational_json(c.offset)}});
  Json edges = Json::array();
  for (const auto& e : sub.edges)
    edges.push_back({{"a", index.at(e.a)}, {"b", index.at(e.b)}, {"cells", e.cells}, {"boundary", e.boundary}});
  return {{"dimension", sub.dimension},
          {"cell_dimension", sub.cell_dimension},
          {"triangulation", sub.triangulation},
          {"points", points},
          {"cells", cells},
          {"edges", edges}};
}

RegularSubdivision subdivision_from_json(const Json& j) {
  RegularSubdivision sub;
  sub.dimension = checked<int>(j, "dimension");
  sub.cell_dimension = checked<int>(j, "cell_dimension");
  sub.triangulation = checked<bool>(j, "triangulation");
  std::vector<LatticePoint> points;
  for (const auto& p : field(j, "points")) points.push_back(lattice_from_json(p, sub.dimension));
  auto point = [&](const Json& id) -> const LatticePoint& {
    if (!id.is_number_unsigned() || id.get<std::size_t>() >= points.size()) parse_error("point index out of range");
    return points[id.get<std::size_t>()];
  };
  for (const auto& c : field(j, "cells")) {
    Cell cell;
    cell.dimension = checked<int>(c, "dimension");
    for (const auto& v : field(c, "vertices")) cell.vertices.push_back(point(v));
    for (const auto& v : field(c, "support")) cell.support.push_back(point(v));
    cell.slope = rational_point_from_json(field(c, "slope"));
    cell.offset = rational_from_json(field(c, "offset"));
    sub.cells.push_back(std::move(cell));
  }
  for (const auto& e : field(j, "edges")) {
    SubdivisionEdge edge;
    edge.a = point(field(e, "a"));
    edge.b = point(field(e, "b"));
    edge.cells = checked<std::vector<std::size_t>>(e, "cells");
    edge.boundary = checked<bool>(e, "boundary");
    sub.edges.push_back(std::move(edge));
  }
  return sub;
}

// ---------------------------------------------------------------------------

Json to_json(const TropicalCurve& curve) {
  Json vertices = Json::array();
  for (const auto& v : curve.vertices) vertices.push_back(rational_point_json(v));
  Json edges = Json::array();
  for (const auto& e : curve.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"direction", e.direction}, {"weight", e.weight}, {"dual", {e.dual_a, e.dual_b}}});
  Json rays = Json::array();
  for (const auto& r : curve.rays)
    rays.push_back({{"base", r.base}, {"direction", r.direction}, {"weight", r.weight}, {"dual", {r.dual_a, r.dual_b}}});
  Json lines = Json::array();
  for (const auto& l : curve.lines)
    lines.push_back({{"point", rational_point_json(l.point)}, {"direction", l.direction}, {"weight", l.weight}, {"dual", {l.dual_a, l.dual_b}}});
  return {{"vertices", vertices}, {"vertex_cell", curve.vertex_cell}, {"edges", edges},
          {"rays", rays},         {"lines", lines},                   {"degenerate", curve.degenerate}};
}

TropicalCurve curve_from_json(const Json& j) {
  TropicalCurve c;
  for (const auto& v : field(j, "vertices")) c.vertices.push_back(rational_point_from_json(v));
  c.vertex_cell = checked<std::vector<std::size_t>>(j, "vertex_cell");
  auto dual = [](const Json& e, LatticePoint& a, LatticePoint& b) {
    const Json& d = field(e, "dual");
    if (!d.is_array() || d.size() != 2) parse_error("dual must be a pair of exponents");
    a = lattice_from_json(d[0], -1);
    b = lattice_from_json(d[1], -1);
  };
  for (const auto& e : field(j, "edges")) {
    CurveEdge edge;
    edge.from = checked<std::size_t>(e, "from");
    edge.to = checked<std::size_t>(e, "to");
    edge.direction = lattice_from_json(field(e, "direction"), 2);
    edge.weight = checked<std::int64_t>(e, "weight");
    dual(e, edge.dual_a, edge.dual_b);
    c.edges.push_back(std::move(edge));
  }
  for (const auto& e : field(j, "rays")) {
    CurveRay ray;
    ray.base = checked<std::size_t>(e, "base");
    ray.direction = lattice_from_json(field(e, "direction"), 2);
    ray.weight = checked<std::int64_t>(e, "weight");
    dual(e, ray.dual_a, ray.dual_b);
    c.rays.push_back(std::move(ray));
  }
  for (const auto& e : field(j, "lines")) {
    CurveLine line;
    line.point = rational_point_from_json(field(e, "point"));
    line.direction = lattice_from_json(field(e, "direction"), 2);
    line.weight = checked<std::int64_t>(e, "weight");
    dual(e, line.dual_a, line.dual_b);
    c.lines.push_back(std::move(line));
  }
  c.degenerate = checked<bool>(j, "degenerate");
  return c;
}

// ---------------------------------------------------------------------------

Json to_json(const SimplexCoamoeba& piece, bool with_triangles) {
  Json j = {{"matrix", piece.matrix},
            {"phases", piece.phases},
            {"determinant", piece.determinant},
            {"base", piece.base},
            {"others", piece.others}};
  if (with_triangles && piece.dimension() == 2) {
    Json tris = Json::array();
    for (const auto& tri : simplex_coamoeba_polygons_2d(piece)) {
      Json t = Json::array();
      for (const auto& p : tri) t.push_back({p.x, p.y});
      tris.push_back(t);
    }
    j["triangles"] = tris;
  }
  return j;
}

Json to_json(const CodualHyperplane& line) {
  return {{"normal", line.normal}, {"offset", line.offset}, {"alpha", line.alpha}, {"beta", line.beta}, {"external", line.external}};
}

Json to_json(const CoamoebaModel& model, bool with_triangles) {
  Json pieces = Json::array();
  for (const auto& p : model.pieces) pieces.push_back(to_json(p, with_triangles));
  Json lines = Json::array();
  for (const auto& l : model.codual_lines) lines.push_back(to_json(l));
  return {{"dimension", model.dimension}, {"pieces", pieces}, {"codual_lines", lines}};
}

CoamoebaModel model_from_json(const Json& j) {
  CoamoebaModel m;
  m.dimension = checked<int>(j, "dimension");
  for (const auto& p : field(j, "pieces")) {
    SimplexCoamoeba s;
    for (const auto& row : field(p, "matrix")) s.matrix.push_back(lattice_from_json(row, m.dimension));
    s.phases = checked<std::vector<double>>(p, "phases");
    s.determinant = checked<std::int64_t>(p, "determinant");
    s.base = lattice_from_json(field(p, "base"), m.dimension);
    for (const auto& o : field(p, "others")) s.others.push_back(lattice_from_json(o, m.dimension));
    if (s.determinant <= 0 || s.phases.size() != s.matrix.size()) parse_error("malformed coamoeba piece");
    m.pieces.push_back(std::move(s));
  }
  for (const auto& l : field(j, "codual_lines")) {
    CodualHyperplane h;
    h.normal = lattice_from_json(field(l, "normal"), m.dimension);
    h.offset = checked<double>(l, "offset");
    h.alpha = lattice_from_json(field(l, "alpha"), m.dimension);
    h.beta = lattice_from_json(field(l, "beta"), m.dimension);
    h.external = checked<bool>(l, "external");
    m.codual_lines.push_back(std::move(h));
  }
  return m;
}

Json to_json(const LocalizationComponent& c) {
  return {{"label", to_string(c.label)}, {"circle", c.circle}, {"start", c.start},
          {"end", c.end},                {"samples", c.samples}, {"midpoint", c.midpoint}};
}

Json raster_summary(const TorusRaster& r) {
  return {{"size", r.size()}, {"fraction", r.fraction()}, {"components", complement_components(r)}};
}

// ---------------------------------------------------------------------------

std::string to_pgm(const TorusRaster& r) {
  const int R = r.size();
  std::string out = "P5\n" + std::to_string(R) + " " + std::to_string(R) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(R) * static_cast<std::size_t>(R));
  for (int row = 0; row < R; ++row)
    for (int i = 0; i < R; ++i) out.push_back(r.at(i, R - 1 - row) ? static_cast<char>(255) : static_cast<char>(0));
  return out;
}

TorusRaster from_pgm(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  if (!in || magic != "P5" || w != h || w < 1 || maxval != 255) parse_error("expected a square binary PGM with maxval 255");
  in.get();
  const auto offset = static_cast<std::size_t>(in.tellg());
  if (bytes.size() < offset + static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) parse_error("truncated PGM data");
  TorusRaster r(w);
  for (int row = 0; row < w; ++row)
    for (int i = 0; i < w; ++i)
      r.set(i, w - 1 - row, static_cast<unsigned char>(bytes[offset + static_cast<std::size_t>(row * w + i)]) >= 128);
  return r;
}

}  // namespace cotrop
