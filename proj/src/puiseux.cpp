#include "cotrop/puiseux.h"

#include "cotrop/error.h"

#include <algorithm>
#include <cmath>
#include <map>

namespace cotrop {

double normalize_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r + 0.0;
}

namespace {

std::vector<SeriesTerm> canonical(std::vector<SeriesTerm> terms) {
  std::map<Rational, Complex> merged;
  for (auto& t : terms) merged[t.exponent] += t.coefficient;
  std::vector<SeriesTerm> out;
  out.reserve(merged.size());
  for (auto& [e, c] : merged) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::InvalidArgument, "non-finite series coefficient");
    }
    if (c != Complex(0.0, 0.0)) out.push_back({e, c});
  }
  return out;
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(std::vector<SeriesTerm> terms) : terms_(canonical(std::move(terms))) {}

PuiseuxSeries PuiseuxSeries::monomial(Complex coefficient, Rational exponent) {
  return PuiseuxSeries({{std::move(exponent), coefficient}});
}

Complex PuiseuxSeries::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroSeries, "zero series has no leading coefficient");
  return terms_.front().coefficient;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& other) const {
  std::vector<SeriesTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return PuiseuxSeries(std::move(all));
}

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& other) const {
  std::vector<SeriesTerm> all;
  all.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) all.push_back({a.exponent + b.exponent, a.coefficient * b.coefficient});
  }
  return PuiseuxSeries(std::move(all));
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& cutoff) const {
  std::vector<SeriesTerm> kept;
  for (const auto& t : terms_) {
    if (t.exponent <= cutoff) kept.push_back(t);
  }
  return PuiseuxSeries(std::move(kept));
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& shift) const {
  std::vector<SeriesTerm> out = terms_;
  for (auto& t : out) t.exponent += shift;
  return PuiseuxSeries(std::move(out));
}

PuiseuxSeries PuiseuxSeries::inverted_exponents() const {
  std::vector<SeriesTerm> out = terms_;
  for (auto& t : out) t.exponent = -t.exponent;
  return PuiseuxSeries(std::move(out));
}

Rational order(const PuiseuxSeries& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroSeries, "order of the zero series");
  return a.terms().front().exponent;
}

Rational valuation(const PuiseuxSeries& a) { return -order(a); }

Complex w_map(const PuiseuxSeries& a) {
  const double modulus = std::exp(to_double(valuation(a)));
  return std::polar(modulus, arg_map(a));
}

double arg_map(const PuiseuxSeries& a) { return normalize_angle(std::arg(a.leading_coefficient())); }

std::vector<Complex> W_map(const SeriesPoint& z) {
  std::vector<Complex> out;
  out.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].is_zero()) {
      throw Error(ErrorCode::ZeroSeries, "coordinate " + std::to_string(i + 1) + " is the zero series");
    }
    out.push_back(w_map(z[i]));
  }
  return out;
}

}  // namespace cotrop
