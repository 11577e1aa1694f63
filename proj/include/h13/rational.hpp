#pragma once

// Exact-coefficient mode. GMP rationals keep composition, normalization and
// truncation identities exact regardless of intermediate coefficient growth.

#include <gmpxx.h>

#include <string>

#include "h13/polynomial.hpp"

namespace h13 {

using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

using TriPolyQ = DensePoly<Rational, 3>;
using BiPolyQ = DensePoly<Rational, 2>;

}  // namespace h13
