// cotrop: command-line front end for the tropical / coamoeba kernel.

#include "cotrop/coamoeba.h"
#include "cotrop/error.h"
#include "cotrop/io_json.h"
#include "cotrop/mirror.h"
#include "cotrop/newton.h"
#include "cotrop/render.h"
#include "cotrop/sampler.h"
#include "cotrop/tropical.h"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

using namespace cotrop;

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string render;
  std::string u = "0";
  double t = 0;
  double alpha = 0;
  int alpha_term = 0;
  int raster = 512;
  int moduli = 256;
  int arguments = 256;
  double log_min = -12;
  double log_max = 12;
  double tolerance = 1e-9;
  int domains = 1;
  int width = 512;
  int height = 512;
  std::uint64_t seed = 0;
  int threads = 1;
  bool perturb = false;
  int resolution = 1024;
  std::string target = "coamoeba_model";
  std::string a, b;
  std::string pgm;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_file(o.out, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Decimal or "p/q" strings, read exactly.
Rational exact_number(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rational(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits.find_first_not_of("-0123456789") != std::string::npos ||
      digits.find('-', 1) != std::string::npos)
    throw Error(ErrorCode::Parse, "malformed number '" + text + "'");
  Rational q = parse_rational(digits);
  BigInt den = 1;
  for (std::size_t k = dot + 1; k < text.size(); ++k) den *= 10;
  return q / Rational(den);
}

PolynomialDocument load(const Options& o) {
  if (o.in.empty()) throw Error(ErrorCode::InvalidArgument, "--in is required");
  PolynomialDocument doc = read_polynomial_file(o.in);
  if (o.alpha != 0) {
    if (o.alpha_term < 0 || o.alpha_term >= static_cast<int>(doc.order.size()))
      throw Error(ErrorCode::OutOfRange, "--alpha-term outside the term list");
    const LatticePoint& key = doc.order[static_cast<std::size_t>(o.alpha_term)];
    const Complex rot = std::polar(1.0, o.alpha);
    doc.complex.set(key, doc.complex.coefficient(key) * rot);
    PuiseuxSeries s = doc.series.coefficient(key) * PuiseuxSeries::constant(rot);
    doc.series.set(key, s);
  }
  return doc;
}

LiftedPointSet lift_for(const PolynomialDocument& doc) {
  return doc.puiseux ? lift_of(doc.series) : spine_lift(doc.complex);
}

RegularSubdivision subdivision_for(const PolynomialDocument& doc, const Options& o) {
  LiftedPointSet lift = lift_for(doc);
  if (o.perturb) lift = perturb_to_triangulation(lift, o.seed);
  return lower_hull_subdivision(lift);
}

RenderSpec spec_for(const Options& o, RenderTarget target) {
  RenderSpec spec;
  spec.target = target;
  spec.width = o.width;
  spec.height = o.height;
  spec.domains = o.domains;
  return spec;
}

SampleConfig sample_config(const Options& o) {
  SampleConfig cfg;
  cfg.raster = o.raster;
  cfg.moduli = o.moduli;
  cfg.arguments = o.arguments;
  cfg.log_modulus_min = o.log_min;
  cfg.log_modulus_max = o.log_max;
  cfg.root_tolerance = o.tolerance;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.ht_t = o.t;
  return cfg;
}

TorusRaster sampled(const Options& o) {
  PolynomialDocument doc = load(o);
  ComplexPolynomial f = doc.complex;
  if (o.t != 0) f = ft_family(f, o.t);
  return sample_coamoeba(f, sample_config(o));
}

CoamoebaModel model_for(const PolynomialDocument& doc, const Options& o) {
  return glue_coamoeba(doc.complex, subdivision_for(doc, o));
}

TropicalCurve curve_for(const PolynomialDocument& doc) {
  return corner_locus_2d(from_lift(lift_for(doc)));
}

int run(const std::string& command, const Options& o) {
  if (command == "subdivide") {
    emit(o, dump(to_json(subdivision_for(load(o), o))));
  } else if (command == "curve") {
    TropicalCurve c = curve_for(load(o));
    if (!o.render.empty()) write_file(o.render, render_svg(c, spec_for(o, RenderTarget::TropicalCurve)));
    emit(o, dump(to_json(c)));
  } else if (command == "mirror") {
    PolynomialDocument doc = load(o);
    TropicalCurve c = tropical_mirror(doc.series, exact_number(o.u));
    if (!o.render.empty()) write_file(o.render, render_svg(c, spec_for(o, RenderTarget::TropicalCurve)));
    emit(o, dump(to_json(c)));
  } else if (command == "coamoeba") {
    CoamoebaModel m = model_for(load(o), o);
    if (!o.render.empty()) write_file(o.render, render_svg(m, spec_for(o, RenderTarget::CoamoebaModel)));
    emit(o, dump(to_json(m)));
  } else if (command == "sample") {
    TorusRaster r = sampled(o);
    if (!o.out.empty()) write_file(o.out, to_pgm(r));
    if (!o.render.empty()) write_file(o.render, render_svg(r, spec_for(o, RenderTarget::Raster)));
    std::cout << dump(raster_summary(r));
  } else if (command == "components") {
    TorusRaster r = o.pgm.empty() ? sampled(o) : from_pgm(read_file(o.pgm));
    emit(o, std::to_string(complement_components(r)) + "\n");
  } else if (command == "hausdorff") {
    TorusRaster ra = from_pgm(read_file(o.a)), rb = from_pgm(read_file(o.b));
    emit(o, format_number(raster_hausdorff(ra, rb)) + "\n");
  } else if (command == "render") {
    RenderTarget target = parse_render_target(o.target);
    RenderSpec spec = spec_for(o, target);
    std::string svg;
    if (target == RenderTarget::Raster) {
      svg = render_svg(from_pgm(read_file(o.in)), spec);
    } else {
      PolynomialDocument doc = load(o);
      if (target == RenderTarget::Newton)
        svg = render_svg(convex_hull(doc.series.support()), subdivision_for(doc, o), spec);
      else if (target == RenderTarget::TropicalCurve)
        svg = render_svg(curve_for(doc), spec);
      else
        svg = render_svg(model_for(doc, o), spec);
    }
    emit(o, svg);
  } else if (command == "localize") {
    CoamoebaModel m = model_for(load(o), o);
    Json lines = Json::array();
    for (const auto& line : m.codual_lines) {
      Json comps = Json::array();
      for (const auto& c : classify_localization(m, line, o.resolution)) {
        Json j = to_json(c);
        j["crossing_distance"] = distance_to_codual_crossing(m, line, c);
        if (!std::isfinite(j["crossing_distance"].get<double>())) j["crossing_distance"] = nullptr;
        comps.push_back(j);
      }
      lines.push_back({{"line", to_json(line)}, {"components", comps}});
    }
    emit(o, dump(lines));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical curves, Newton subdivisions and coamoebas"};
  app.require_subcommand(1);
  Options o;

  auto in = [&](CLI::App* c) { c->add_option("--in", o.in, "polynomial JSON (PGM for raster rendering)")->required(); };
  auto out = [&](CLI::App* c) { c->add_option("--out", o.out, "output file (default: standard output)"); };
  auto lift = [&](CLI::App* c) {
    c->add_flag("--perturb", o.perturb, "perturb heights to a triangulation");
    c->add_option("--seed", o.seed, "random seed");
  };
  auto phase = [&](CLI::App* c) {
    c->add_option("--alpha", o.alpha, "rotate one coefficient by e^{i alpha}");
    c->add_option("--alpha-term", o.alpha_term, "index of the rotated term in the input file");
  };
  auto view = [&](CLI::App* c) {
    c->add_option("--domains", o.domains, "fundamental domains per side");
    c->add_option("--width", o.width, "SVG width");
    c->add_option("--height", o.height, "SVG height");
  };
  auto sampling = [&](CLI::App* c) {
    c->add_option("--raster", o.raster, "raster side R");
    c->add_option("--moduli", o.moduli, "log-modulus samples M");
    c->add_option("--arguments", o.arguments, "argument samples K");
    c->add_option("--log-min", o.log_min, "smallest log-modulus");
    c->add_option("--log-max", o.log_max, "largest log-modulus");
    c->add_option("--tolerance", o.tolerance, "root backward-error tolerance");
    c->add_option("--t", o.t, "sample f_t through H_t, t in (0, 1/e]");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--threads", o.threads, "worker threads");
  };

  auto* subdivide = app.add_subcommand("subdivide", "regular subdivision of the lifted support");
  in(subdivide), out(subdivide), lift(subdivide), phase(subdivide);

  auto* curve = app.add_subcommand("curve", "tropical curve of the polynomial");
  in(curve), out(curve), phase(curve), view(curve);
  curve->add_option("--render", o.render, "also write an SVG");

  auto* mirror = app.add_subcommand("mirror", "tropical mirror curve at parameter u");
  in(mirror), out(mirror), view(mirror);
  mirror->add_option("--u", o.u, "deformation parameter in (-1, 0]");
  mirror->add_option("--render", o.render, "also write an SVG");

  auto* coamoeba = app.add_subcommand("coamoeba", "glued coamoeba model");
  in(coamoeba), out(coamoeba), lift(coamoeba), phase(coamoeba), view(coamoeba);
  coamoeba->add_option("--render", o.render, "also write an SVG");

  auto* sample = app.add_subcommand("sample", "sampled coamoeba raster");
  in(sample), phase(sample), sampling(sample), view(sample);
  sample->add_option("--out", o.out, "PGM output");
  sample->add_option("--render", o.render, "also write an SVG");

  auto* components = app.add_subcommand("components", "complement components of a sampled coamoeba");
  components->add_option("--in", o.in, "polynomial JSON");
  components->add_option("--pgm", o.pgm, "count an existing raster instead");
  out(components), phase(components), sampling(components);

  auto* hausdorff = app.add_subcommand("hausdorff", "torus Hausdorff distance between two rasters");
  hausdorff->add_option("--a", o.a, "first PGM")->required();
  hausdorff->add_option("--b", o.b, "second PGM")->required();
  out(hausdorff);

  auto* render = app.add_subcommand("render", "SVG of a Newton polygon, curve, model or raster");
  in(render), out(render), lift(render), phase(render), view(render);
  render->add_option("--target", o.target, "newton | tropical_curve | coamoeba_model | raster");

  auto* localize = app.add_subcommand("localize", "classify localization components on codual lines");
  in(localize), out(localize), lift(localize), phase(localize);
  localize->add_option("--resolution", o.resolution, "samples per codual circle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const Error& e) {
    std::cerr << "cotrop: " << e.what() << "\n";
    return is_validation_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "cotrop: " << e.what() << "\n";
    return 3;
  }
}
