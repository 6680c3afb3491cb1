#pragma once

#include "cotrop/error.h"
#include "cotrop/polynomial.h"
#include "cotrop/puiseux.h"
#include "cotrop/rational.h"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>

namespace testing {

using namespace cotrop;

inline Rational q(const char* text) { return parse_rational(text); }

inline PuiseuxSeries mono(Complex c, const char* exponent = "0") { return PuiseuxSeries::monomial(c, q(exponent)); }

inline PuiseuxSeries series(std::initializer_list<std::pair<const char*, Complex>> terms) {
  std::vector<SeriesTerm> out;
  for (const auto& [e, c] : terms) out.push_back({q(e), c});
  return PuiseuxSeries(out);
}

struct Term {
  LatticePoint alpha;
  PuiseuxSeries a;
};

inline PolynomialOverSeries poly(std::initializer_list<Term> terms, int n = 2) {
  PolynomialOverSeries f(n);
  for (const auto& t : terms) f.set(t.alpha, t.a);
  return f;
}

struct CTerm {
  LatticePoint alpha;
  Complex a;
};

inline ComplexPolynomial cpoly(std::initializer_list<CTerm> terms, int n = 2) {
  ComplexPolynomial f(n);
  for (const auto& t : terms) f.set(t.alpha, t.a);
  return f;
}

template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing
