#pragma once

#include "cotrop/rational.h"

#include <complex>
#include <cstddef>
#include <vector>

namespace cotrop {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

/// Angle comparison tolerance used across the torus code.
inline constexpr double kAngleEps = 1e-9;

/// Reduce an angle to [0, 2π).
double normalize_angle(double theta);

struct SeriesTerm {
  Rational exponent;
  Complex coefficient;

  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

/// Truncated Puiseux series Σ ξ_r t^r with rational exponents.
///
/// Terms are kept sorted by strictly increasing exponent with nonzero
/// coefficients; equal exponents are merged on construction. The empty
/// series is the zero element.
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;
  explicit PuiseuxSeries(std::vector<SeriesTerm> terms);

  static PuiseuxSeries monomial(Complex coefficient, Rational exponent);
  static PuiseuxSeries constant(Complex c) { return monomial(c, Rational(0)); }

  const std::vector<SeriesTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Coefficient of the lowest exponent. Throws ZeroSeries on the zero series.
  Complex leading_coefficient() const;

  PuiseuxSeries operator+(const PuiseuxSeries& other) const;
  PuiseuxSeries operator*(const PuiseuxSeries& other) const;

  /// Keep only terms with exponent <= cutoff.
  PuiseuxSeries truncated(const Rational& cutoff) const;

  /// Multiply by t^shift.
  PuiseuxSeries shifted(const Rational& shift) const;

  /// Σ ξ_r t^{-r}.
  PuiseuxSeries inverted_exponents() const;

  friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

 private:
  std::vector<SeriesTerm> terms_;
};

/// Minimum exponent. Throws ZeroSeries.
Rational order(const PuiseuxSeries& a);

/// val(a) = -order(a).
Rational valuation(const PuiseuxSeries& a);

/// e^{val(a)} e^{i arg ξ_{ord(a)}}.
Complex w_map(const PuiseuxSeries& a);

/// Argument of the leading coefficient in [0, 2π).
double arg_map(const PuiseuxSeries& a);

using SeriesPoint = std::vector<PuiseuxSeries>;

/// Coordinate-wise w_map; a zero coordinate raises ZeroSeries naming its
/// 1-based index.
std::vector<Complex> W_map(const SeriesPoint& z);

}  // namespace cotrop
