#pragma once

#include "cotrop/polynomial.h"
#include "cotrop/rational.h"
#include "cotrop/tropical.h"

#include <vector>

namespace cotrop {

/// Data for one non-vertex monomial β of a polynomial whose Newton polytope
/// is a simplex: its complex coefficient, its order, and the height of the
/// hyperplane through the lifted simplex vertices above β.
struct DeformationContext {
  LatticePoint beta;
  Complex xi_beta;
  Rational nu_beta;
  Rational support_value;
};

/// Exponent of the deformed coefficient ξ_β t^e at parameter u in (-1, 1]:
///   u ∈ [0, 1]:  e = u ν + (1 - u) s
///   u ∈ (-1, 0]: e = (1 - u) s - u / (u + 1)
/// where s is the support value. Both branches agree at u = 0.
Rational deform_exponent(const DeformationContext& ctx, const Rational& u);

/// Simplex polynomial normalized so every support value is >= 0 (f is
/// multiplied by t^c with the smallest c >= 0 that achieves it).
struct DeformationSetup {
  PolynomialOverSeries normalized;
  Rational shift;
  std::vector<DeformationContext> contexts;
};

/// Requires conv(supp f) to be a simplex and every non-vertex coefficient monomial.
DeformationSetup deformation_setup(const PolynomialOverSeries& f);

/// f_u: each non-vertex coefficient replaced by ξ_β t^{deform_exponent(u)}.
PolynomialOverSeries deform(const PolynomialOverSeries& f, const Rational& u);

/// Exponent and t-exponent reflection: a_α(t) z^α -> a_α(t^{-1}) z^{-α}.
PolynomialOverSeries mirror_polynomial(const PolynomialOverSeries& f);

/// Corner locus of the tropicalization of the mirror of f_u, u in (-1, 0].
TropicalCurve tropical_mirror(const PolynomialOverSeries& f, const Rational& u);

struct SymmetryParameter {
  Rational value;
  bool clamped = false;
};

/// s = -ν_f(β) clamped to (-1, 0]; vertex coefficients must have order 0 and
/// there must be exactly one monomial non-vertex term.
SymmetryParameter symmetry_parameter(const PolynomialOverSeries& f);

}  // namespace cotrop
