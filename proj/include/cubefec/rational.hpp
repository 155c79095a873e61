// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEFEC_RATIONAL_HPP
#define CUBEFEC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cubefec {

/// Coefficient field for everything in this library: exact arbitrary-precision
/// rationals. Floating point is deliberately absent; every certificate below is
/// a nonsingularity or rank statement and survives only under exact arithmetic.
using Rational = mpq_class;

/// Canonicalized rational num/den.
inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string num_str(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_str(const Rational& q) { return q.get_den().get_str(); }

/// Parse from separate decimal strings (the JSON wire format).
inline Rational rat_from_strings(const std::string& num, const std::string& den) {
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Parse "p" or "p/q".
inline Rational rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return rat_from_strings(s, "1");
  return rat_from_strings(s.substr(0, slash), s.substr(slash + 1));
}

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return num_str(q);
  return num_str(q) + "/" + den_str(q);
}

/// q^e for e >= 0 (0^0 = 1).
inline Rational rat_pow(const Rational& q, int e) {
  if (e < 0) throw std::domain_error("negative exponent");
  Rational acc(1), base(q);
  for (; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

}  // namespace cubefec

#endif
