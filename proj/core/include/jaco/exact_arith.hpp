#pragma once

// Exact floor evaluation for the irrational constants that show up in the
// Jaco graph formulas: numbers of the form (p + q*sqrt(5)) / d and e^t.
// Nothing in the result path touches floating point.

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace jaco {

using WideInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// floor(sqrt(x)). Throws std::domain_error for negative x.
std::uint64_t isqrt(std::uint64_t x);
unsigned __int128 isqrt(unsigned __int128 x);
WideInt isqrt(const WideInt& x);

/// floor(c * sqrt(5)), total over the integers.
std::int64_t floor_mul_sqrt5(std::int64_t c);
WideInt floor_mul_sqrt5(const WideInt& c);

/**
 * floor(m * (a + b*sqrt(5)) / d) for d >= 1.
 *
 * Evaluated as floordiv(a*m + floor(b*m*sqrt(5)), d). When b*m != 0 the
 * real numerator a*m + b*m*sqrt(5) is irrational, so it lies strictly
 * inside the open interval (k, k+1) with k = a*m + floor(b*m*sqrt(5)).
 * No multiple of d lies strictly between k and k+1, hence floor(y/d) takes
 * the same value for every y in [k, k+1) and equals floordiv(k, d). When
 * b*m == 0 the numerator is the integer a*m and floordiv is exact.
 *
 * The int64 overload uses 128-bit intermediates while |b*m| <= 2^62 and
 * falls back to arbitrary precision beyond that; it throws
 * std::overflow_error if the result itself does not fit in 64 bits.
 * Throws std::invalid_argument when d <= 0.
 */
std::int64_t floor_affine_sqrt5(std::int64_t a, std::int64_t b, std::int64_t d,
                                std::int64_t m);
WideInt floor_affine_sqrt5(const WideInt& a, const WideInt& b, const WideInt& d,
                           const WideInt& m);

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Largest t accepted by floor_exp / exp_enclosure.
inline constexpr unsigned kFloorExpMaxT = 2000;

/**
 * Enclosure of e^t from the Taylor partial sum with `terms` + 1 terms
 * (powers 0..terms). The upper end adds 2 * t^(terms+1) / (terms+1)!, which
 * bounds the tail whenever terms >= 2t - 2 (the tail is dominated by a
 * geometric series of ratio t/(terms+2) <= 1/2). Requires terms >= 2t.
 */
RationalInterval exp_enclosure(unsigned t, unsigned terms);

/// floor(e^t), exact. Throws std::out_of_range for t > kFloorExpMaxT.
WideInt floor_exp(unsigned t);

/// Floor division rounding toward negative infinity; d > 0.
inline WideInt floor_div(const WideInt& n, const WideInt& d) {
  WideInt q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

WideInt floor_of(const Rational& r);

/// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const WideInt& v);

}  // namespace jaco
