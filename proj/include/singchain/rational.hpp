#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace singchain {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& p, const BigInt& q) { return Rational(p, q); }

// Always "p/q" with q > 0, so 1 prints as "1/1".
inline std::string to_string(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return numerator(x).str() + "/" + denominator(x).str();
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace singchain
