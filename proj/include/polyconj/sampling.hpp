#pragma once

#include <cmath>
#include <cstdlib>

#include "polyconj/ratpoly.hpp"

namespace polyconj {

inline Rational power_of_ten(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

/// Positive double rounded to five significant digits, exactly.
inline Rational quantize_positive(double v) {
  int e = static_cast<int>(std::floor(std::log10(v)));
  auto mant = static_cast<long>(std::llround(v / std::pow(10.0, e - 4)));
  Rational q = Rational(mant) * power_of_ten(e - 4);
  q.canonicalize();
  return q;
}

inline Rational quantize(double v) {
  if (v == 0.0) return Rational(0);
  return v > 0 ? quantize_positive(v) : Rational(-quantize_positive(-v));
}

}  // namespace polyconj
