#pragma once

#include "cotrop/coamoeba.h"
#include "cotrop/newton.h"
#include "cotrop/sampler.h"
#include "cotrop/tropical.h"

#include <string>

namespace cotrop {

enum class RenderTarget { Newton, TropicalCurve, CoamoebaModel, Raster };

const char* to_string(RenderTarget target);
RenderTarget parse_render_target(const std::string& name);

struct RenderSpec {
  RenderTarget target = RenderTarget::CoamoebaModel;
  int width = 512;
  int height = 512;
  int domains = 1;  // k×k fundamental domains for torus targets
  double line_width = 1.5;

  void validate() const;
};

/// %.9g, with "-0" printed as "0".
std::string format_number(double x);

std::string render_svg(const NewtonPolytope& poly, const RegularSubdivision& sub, const RenderSpec& spec);
std::string render_svg(const TropicalCurve& curve, const RenderSpec& spec);
/// One filled path per piece triangle and one stroked path per codual line.
std::string render_svg(const CoamoebaModel& model, const RenderSpec& spec);
std::string render_svg(const TorusRaster& raster, const RenderSpec& spec);

}  // namespace cotrop
