#include "cotrop/rational.h"

#include "cotrop/error.h"

#include <cmath>

namespace cotrop {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::EmptyTruncation: return "EmptyTruncation";
    case ErrorCode::EmptyCurve: return "EmptyCurve";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotSimplex: return "NotSimplex";
    case ErrorCode::NotMaximallySparse: return "NotMaximallySparse";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::NotTriangulation: return "NotTriangulation";
    case ErrorCode::UnsupportedCell: return "UnsupportedCell";
    case ErrorCode::IllegalResolution: return "IllegalResolution";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TargetMismatch: return "TargetMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::OutOfRange:
    case ErrorCode::IllegalResolution:
    case ErrorCode::SizeMismatch:
    case ErrorCode::TargetMismatch:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnsupportedDimension:
    case ErrorCode::ZeroSeries:
      return true;
    default:
      return false;
  }
}

std::string to_string(const Rational& q) {
  const BigInt& num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw Error(ErrorCode::Parse, "bad rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorCode::Parse, "bad rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational approximate_rational(double x, int bits) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  const double scaled = std::nearbyint(std::ldexp(x, bits));
  BigInt num(static_cast<long long>(scaled));
  BigInt den = BigInt(1) << bits;
  return Rational(num, den);
}

Rational floor_to_integer(const Rational& q) {
  const BigInt& num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  BigInt quotient = num / den;
  if (num < 0 && quotient * den != num) quotient -= 1;
  return Rational(quotient);
}

}  // namespace cotrop
