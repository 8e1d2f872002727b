#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nhk {

/// Exact rational scalar. All coefficient arithmetic in the library is exact;
/// no floating point is used anywhere.
using Rational = mpq_class;
using BigInt = mpz_class;

inline std::string rational_str(const Rational& q) { return q.get_str(); }

/// gmpxx has no long long constructor; coordinates are long long throughout.
inline Rational rat(long long v) { return Rational(static_cast<long>(v)); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
inline Rational rational_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace nhk
