#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace coxmod {

// All counting in this library is exact. Face counts fit in 64 bits only up
// to ten-ish nodes, and the closed formulas are meant to be evaluated far
// beyond that, so everything routes through arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficients by the Pascal recurrence, memoized row by row.
// C(n,k) = 0 for k < 0 or k > n; n must be nonnegative.
const Int& binomial(int n, int k);

Int factorial(int n);

// n!! with the usual empty-product conventions: (-1)!! = 0!! = 1.
Int double_factorial(int n);

// 2^e as an exact integer, e >= 0.
Int pow2(int e);

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Int to_integer(const Rat& q) {
  if (!is_integer(q)) throw std::domain_error("expected an integer rational");
  return numerator(q);
}

}  // namespace coxmod
