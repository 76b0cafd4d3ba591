#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qtwist {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Engine-wide error type. All failure modes (division by zero, poles,
/// singular matrices, non-nilpotent exponents, bad input files) throw this.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_to_string(const BigRat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parse "p" or "p/q" with optional sign; q must be positive.
inline BigRat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den <= 0) throw Error("rational denominator must be positive: " + s);
    return BigRat(num, den);
  } catch (const std::runtime_error&) {
    throw Error("malformed rational literal: " + s);
  }
}

inline BigRat rat_pow(const BigRat& base, long exp) {
  if (exp == 0) return BigRat(1);
  if (base.is_zero()) {
    if (exp < 0) throw Error("zero raised to a negative power");
    return BigRat(0);
  }
  BigInt n = numerator(base), d = denominator(base);
  unsigned long k = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  BigInt np = boost::multiprecision::pow(n, static_cast<unsigned>(k));
  BigInt dp = boost::multiprecision::pow(d, static_cast<unsigned>(k));
  // The (n, d) constructor rejects negative denominators, so divide instead.
  return exp > 0 ? BigRat(np) / BigRat(dp) : BigRat(dp) / BigRat(np);
}

}  // namespace qtwist
