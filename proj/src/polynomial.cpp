#include "cotrop/polynomial.h"

#include "cotrop/error.h"

#include <cmath>

namespace cotrop {

std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

namespace {

void check_exponent(const LatticePoint& alpha, int dimension) {
  if (static_cast<int>(alpha.size()) != dimension) {
    throw Error(ErrorCode::InvalidArgument,
                "exponent " + to_string(alpha) + " does not have dimension " + std::to_string(dimension));
  }
}

}  // namespace

PolynomialOverSeries::PolynomialOverSeries(int dimension, std::map<LatticePoint, PuiseuxSeries> terms)
    : dimension_(dimension) {
  for (auto& [alpha, a] : terms) set(alpha, std::move(a));
}

std::vector<LatticePoint> PolynomialOverSeries::support() const {
  std::vector<LatticePoint> out;
  for (const auto& [alpha, _] : terms_) out.push_back(alpha);
  return out;
}

const PuiseuxSeries& PolynomialOverSeries::coefficient(const LatticePoint& alpha) const {
  auto it = terms_.find(alpha);
  if (it == terms_.end()) throw Error(ErrorCode::InvalidArgument, "no term at " + to_string(alpha));
  return it->second;
}

void PolynomialOverSeries::set(const LatticePoint& alpha, PuiseuxSeries a) {
  check_exponent(alpha, dimension_);
  if (a.is_zero()) throw Error(ErrorCode::ZeroSeries, "zero coefficient at " + to_string(alpha));
  terms_[alpha] = std::move(a);
}

PolynomialOverSeries PolynomialOverSeries::times_t_power(const Rational& shift) const {
  PolynomialOverSeries out(dimension_);
  for (const auto& [alpha, a] : terms_) out.set(alpha, a.shifted(shift));
  return out;
}

ComplexPolynomial::ComplexPolynomial(int dimension, std::map<LatticePoint, Complex> terms)
    : dimension_(dimension) {
  for (auto& [alpha, a] : terms) set(alpha, a);
}

std::vector<LatticePoint> ComplexPolynomial::support() const {
  std::vector<LatticePoint> out;
  for (const auto& [alpha, _] : terms_) out.push_back(alpha);
  return out;
}

Complex ComplexPolynomial::coefficient(const LatticePoint& alpha) const {
  auto it = terms_.find(alpha);
  if (it == terms_.end()) throw Error(ErrorCode::InvalidArgument, "no term at " + to_string(alpha));
  return it->second;
}

void ComplexPolynomial::set(const LatticePoint& alpha, Complex a) {
  check_exponent(alpha, dimension_);
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
    throw Error(ErrorCode::InvalidArgument, "non-finite coefficient at " + to_string(alpha));
  }
  if (a == Complex(0.0, 0.0)) throw Error(ErrorCode::InvalidArgument, "zero coefficient at " + to_string(alpha));
  terms_[alpha] = a;
}

Complex ComplexPolynomial::evaluate(const std::vector<Complex>& z) const {
  Complex sum = 0.0;
  for (const auto& [alpha, a] : terms_) {
    Complex term = a;
    for (int j = 0; j < dimension_; ++j) {
      const Complex base = alpha[j] < 0 ? 1.0 / z[j] : z[j];
      for (std::int64_t k = 0; k < (alpha[j] < 0 ? -alpha[j] : alpha[j]); ++k) term *= base;
    }
    sum += term;
  }
  return sum;
}

ComplexPolynomial leading_coefficients(const PolynomialOverSeries& f) {
  ComplexPolynomial out(f.dimension());
  for (const auto& [alpha, a] : f.terms()) out.set(alpha, a.leading_coefficient());
  return out;
}

PolynomialOverSeries as_series(const ComplexPolynomial& f) {
  PolynomialOverSeries out(f.dimension());
  for (const auto& [alpha, a] : f.terms()) out.set(alpha, PuiseuxSeries::constant(a));
  return out;
}

}  // namespace cotrop
