#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace cnspec {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) { return make_rational(BigInt(num), BigInt(den)); }

/// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Always "num/den"; CSV output uses this so every cell parses the same way.
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& text) {
  Rational r(text, 10);
  r.canonicalize();
  return r;
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace cnspec
