#pragma once

#include "cotrop/coamoeba.h"
#include "cotrop/newton.h"
#include "cotrop/polynomial.h"
#include "cotrop/sampler.h"
#include "cotrop/tropical.h"

#include <json.hpp>

#include <string>
#include <variant>

namespace cotrop {

using Json = nlohmann::json;

/// {"variables": n, "field": "complex" | "puiseux", "terms": [{"exponent": [...], "coefficient": ...}]}
/// Complex coefficients are [re, im] (a bare number is read as real); Puiseux
/// coefficients are arrays of {"exp": "p/q", "re": x, "im": y}.
struct PolynomialDocument {
  int variables = 2;
  bool puiseux = false;
  PolynomialOverSeries series;
  ComplexPolynomial complex;
  std::vector<LatticePoint> order;  // exponents as listed in the file
};

PolynomialDocument parse_polynomial_document(const Json& j);
PolynomialDocument read_polynomial_file(const std::string& path);

Json to_json(const ComplexPolynomial& f);
Json to_json(const PolynomialOverSeries& f);
Json to_json(const PuiseuxSeries& a);
PuiseuxSeries series_from_json(const Json& j);

Json to_json(const RegularSubdivision& sub);
RegularSubdivision subdivision_from_json(const Json& j);

Json to_json(const TropicalCurve& curve);
TropicalCurve curve_from_json(const Json& j);

Json to_json(const SimplexCoamoeba& piece, bool with_triangles = true);
Json to_json(const CodualHyperplane& line);
Json to_json(const CoamoebaModel& model, bool with_triangles = true);
CoamoebaModel model_from_json(const Json& j);

Json to_json(const LocalizationComponent& c);

Json raster_summary(const TorusRaster& r);

/// Binary PGM, one byte per cell, 255 = marked; image row 0 is the top (largest θ₂).
std::string to_pgm(const TorusRaster& r);
TorusRaster from_pgm(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cotrop
