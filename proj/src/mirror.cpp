#include "cotrop/mirror.h"

#include "cotrop/error.h"
#include "cotrop/newton.h"

#include <algorithm>

namespace cotrop {

Rational deform_exponent(const DeformationContext& ctx, const Rational& u) {
  if (u <= -1 || u > 1) throw Error(ErrorCode::OutOfRange, "u = " + to_string(u) + " outside (-1, 1]");
  const Rational& s = ctx.support_value;
  if (u >= 0) return u * ctx.nu_beta + (1 - u) * s;
  return (1 - u) * s - u / (u + 1);
}

namespace {

// Affine function through the lifted simplex vertices, evaluated at beta.
// Solved by Cramer's rule in exact arithmetic.
Rational simplex_height(const std::vector<LatticePoint>& verts, const std::vector<Rational>& heights,
                        const LatticePoint& beta) {
  const std::size_t n = beta.size();
  if (n == 1) {
    const Rational x0(verts[0][0]), x1(verts[1][0]);
    const Rational lambda = (Rational(beta[0]) - x0) / (x1 - x0);
    return heights[0] + lambda * (heights[1] - heights[0]);
  }
  // n == 2: barycentric coordinates.
  const Rational ax(verts[1][0] - verts[0][0]), ay(verts[1][1] - verts[0][1]);
  const Rational bx(verts[2][0] - verts[0][0]), by(verts[2][1] - verts[0][1]);
  const Rational px(beta[0] - verts[0][0]), py(beta[1] - verts[0][1]);
  const Rational det = ax * by - ay * bx;
  const Rational l1 = (px * by - py * bx) / det;
  const Rational l2 = (ax * py - ay * px) / det;
  return heights[0] + l1 * (heights[1] - heights[0]) + l2 * (heights[2] - heights[0]);
}

}  // namespace

DeformationSetup deformation_setup(const PolynomialOverSeries& f) {
  const int n = f.dimension();
  if (n < 1 || n > 2) throw Error(ErrorCode::UnsupportedDimension, "deformations need n in {1,2}");
  const NewtonPolytope poly = convex_hull(f.support());
  if (static_cast<int>(poly.vertices.size()) != n + 1 || poly.affine_dimension != n) {
    throw Error(ErrorCode::NotSimplex, "Newton polytope is not a simplex");
  }
  std::vector<Rational> vertex_orders;
  for (const auto& v : poly.vertices) vertex_orders.push_back(order(f.coefficient(v)));

  DeformationSetup setup;
  setup.shift = 0;
  std::vector<DeformationContext> raw;
  for (const auto& [alpha, a] : f.terms()) {
    if (std::find(poly.vertices.begin(), poly.vertices.end(), alpha) != poly.vertices.end()) continue;
    if (!a.is_monomial()) {
      throw Error(ErrorCode::InvalidArgument, "coefficient at " + to_string(alpha) + " is not a monomial");
    }
    DeformationContext ctx{alpha, a.leading_coefficient(), order(a), simplex_height(poly.vertices, vertex_orders, alpha)};
    if (-ctx.support_value > setup.shift) setup.shift = -ctx.support_value;
    raw.push_back(std::move(ctx));
  }
  for (auto& ctx : raw) {
    ctx.nu_beta += setup.shift;
    ctx.support_value += setup.shift;
  }
  setup.contexts = std::move(raw);
  setup.normalized = setup.shift == 0 ? f : f.times_t_power(setup.shift);
  return setup;
}

PolynomialOverSeries deform(const PolynomialOverSeries& f, const Rational& u) {
  if (u <= -1 || u > 1) throw Error(ErrorCode::OutOfRange, "u = " + to_string(u) + " outside (-1, 1]");
  DeformationSetup setup = deformation_setup(f);
  PolynomialOverSeries out = setup.normalized;
  for (const auto& ctx : setup.contexts) {
    out.set(ctx.beta, PuiseuxSeries::monomial(ctx.xi_beta, deform_exponent(ctx, u)));
  }
  return out;
}

PolynomialOverSeries mirror_polynomial(const PolynomialOverSeries& f) {
  PolynomialOverSeries out(f.dimension());
  for (const auto& [alpha, a] : f.terms()) {
    LatticePoint neg = alpha;
    for (auto& x : neg) x = -x;
    out.set(neg, a.inverted_exponents());
  }
  return out;
}

TropicalCurve tropical_mirror(const PolynomialOverSeries& f, const Rational& u) {
  if (u <= -1 || u > 0) throw Error(ErrorCode::OutOfRange, "mirror parameter u = " + to_string(u) + " outside (-1, 0]");
  if (f.dimension() != 2) throw Error(ErrorCode::UnsupportedDimension, "tropical_mirror needs n = 2");
  return corner_locus_2d(tropicalize(mirror_polynomial(deform(f, u))));
}

SymmetryParameter symmetry_parameter(const PolynomialOverSeries& f) {
  const NewtonPolytope poly = convex_hull(f.support());
  const PuiseuxSeries* beta_coefficient = nullptr;
  for (const auto& [alpha, a] : f.terms()) {
    const bool vertex = std::find(poly.vertices.begin(), poly.vertices.end(), alpha) != poly.vertices.end();
    if (vertex) {
      if (order(a) != 0) throw Error(ErrorCode::NotNormalized, "vertex " + to_string(alpha) + " has nonzero order");
      continue;
    }
    if (beta_coefficient) throw Error(ErrorCode::InvalidArgument, "more than one non-vertex term");
    if (!a.is_monomial()) throw Error(ErrorCode::InvalidArgument, "a_beta is not a monomial");
    beta_coefficient = &a;
  }
  if (!beta_coefficient) throw Error(ErrorCode::InvalidArgument, "no non-vertex term");
  SymmetryParameter s;
  s.value = -order(*beta_coefficient);
  if (s.value > 0) {
    s.value = 0;
    s.clamped = true;
  } else if (s.value <= -1) {
    s.value = -1 + perturbation_bound();
    s.clamped = true;
  }
  return s;
}

}  // namespace cotrop
