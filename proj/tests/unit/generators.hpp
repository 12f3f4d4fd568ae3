#pragma once

#include <random>

#include "crankforge/laurent.hpp"
#include "crankforge/qseries.hpp"

namespace crankforge::testing {

/// Random Laurent polynomial, exponents in [lo, hi], coefficients in [-cmax, cmax].
inline LaurentPoly random_laurent(std::mt19937_64& rng, int lo = -10, int hi = 10, long cmax = 99,
                                  int max_terms = 6) {
  std::uniform_int_distribution<int> exp(lo, hi);
  std::uniform_int_distribution<long> coeff(-cmax, cmax);
  std::uniform_int_distribution<int> count(0, max_terms);
  std::map<int, mpz_class> terms;
  for (int n = count(rng); n > 0; --n) terms[exp(rng)] += coeff(rng);
  return LaurentPoly::from_terms(terms);
}

/// Random series with constant term 1.
inline QSeries random_unit_series(std::mt19937_64& rng, int depth) {
  QSeries s = QSeries::one(depth);
  for (int d = 1; d <= depth; ++d) s.set(d, random_laurent(rng, -3, 3, 5, 3));
  return s;
}

}  // namespace crankforge::testing
