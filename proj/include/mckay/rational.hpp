#pragma once

#include <gmpxx.h>

#include <string>

namespace mckay {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) {
  return r.get_str();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Caller guarantees the value is an integer that fits in a long.
inline long to_long(const Rational& r) { return r.get_num().get_si(); }

}  // namespace mckay
