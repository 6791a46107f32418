#pragma once

#include <gmpxx.h>

#include <string>

#include "qhr/errors.hpp"

namespace qhr {

// Exact rationals, always canonical (lowest terms, positive denominator).
// mpq_class arithmetic keeps results canonical; constructors from raw
// integer pairs go through make_rational below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q" with q > 0 after normalization.
inline Rational parse_rational(const std::string& s, int line_no = 0) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(s);
      return Rational(n);
    }
    Integer n(s.substr(0, slash));
    Integer d(s.substr(slash + 1));
    if (d == 0) throw ParseError("rational with zero denominator: " + s, line_no);
    Rational r(n, d);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational: " + s, line_no);
  }
}

inline std::string format_rational(const Rational& r) {
  return r.get_str();
}

}  // namespace qhr
