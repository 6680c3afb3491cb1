#pragma once

#include "cotrop/puiseux.h"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cotrop {

/// Exponent vector. Coordinates are bounded well inside int64 at the scales
/// this library targets; JSON import rejects anything larger than 2^31.
using LatticePoint = std::vector<std::int64_t>;

std::string to_string(const LatticePoint& p);

/// Sparse polynomial with Puiseux-series coefficients, f = Σ a_α z^α.
class PolynomialOverSeries {
 public:
  explicit PolynomialOverSeries(int dimension = 2) : dimension_(dimension) {}
  PolynomialOverSeries(int dimension, std::map<LatticePoint, PuiseuxSeries> terms);

  int dimension() const { return dimension_; }
  const std::map<LatticePoint, PuiseuxSeries>& terms() const { return terms_; }
  std::vector<LatticePoint> support() const;
  const PuiseuxSeries& coefficient(const LatticePoint& alpha) const;
  bool contains(const LatticePoint& alpha) const { return terms_.count(alpha) != 0; }

  /// Inserts or replaces a term. Zero coefficients are rejected.
  void set(const LatticePoint& alpha, PuiseuxSeries a);

  /// Multiply every coefficient by t^shift.
  PolynomialOverSeries times_t_power(const Rational& shift) const;

  friend bool operator==(const PolynomialOverSeries&, const PolynomialOverSeries&) = default;

 private:
  int dimension_;
  std::map<LatticePoint, PuiseuxSeries> terms_;
};

/// Sparse polynomial with complex coefficients.
class ComplexPolynomial {
 public:
  explicit ComplexPolynomial(int dimension = 2) : dimension_(dimension) {}
  ComplexPolynomial(int dimension, std::map<LatticePoint, Complex> terms);

  int dimension() const { return dimension_; }
  const std::map<LatticePoint, Complex>& terms() const { return terms_; }
  std::vector<LatticePoint> support() const;
  Complex coefficient(const LatticePoint& alpha) const;
  bool contains(const LatticePoint& alpha) const { return terms_.count(alpha) != 0; }
  void set(const LatticePoint& alpha, Complex a);

  Complex evaluate(const std::vector<Complex>& z) const;

  friend bool operator==(const ComplexPolynomial&, const ComplexPolynomial&) = default;

 private:
  int dimension_;
  std::map<LatticePoint, Complex> terms_;
};

using ComplexPolynomial2 = ComplexPolynomial;

/// Leading complex coefficients ξ_{ord(a_α)} of every term.
ComplexPolynomial leading_coefficients(const PolynomialOverSeries& f);

/// Constant-series lift of a complex polynomial (every coefficient at t^0).
PolynomialOverSeries as_series(const ComplexPolynomial& f);

}  // namespace cotrop
