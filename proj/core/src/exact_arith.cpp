#include "jaco/exact_arith.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jaco {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kFastLimit = std::int64_t{1} << 62;

i128 floordiv128(i128 n, i128 d) {
  i128 q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

i128 floor_mul_sqrt5_128(i128 c) {
  // |c| <= 2^62, so 5c^2 < 2^127.
  const u128 mag = static_cast<u128>(c < 0 ? -c : c);
  const u128 root = isqrt(5 * mag * mag);
  if (c >= 0) return static_cast<i128>(root);
  return c == 0 ? 0 : -static_cast<i128>(root) - 1;
}

bool fits_fast(i128 v) { return v >= -i128{kFastLimit} && v <= i128{kFastLimit}; }

}  // namespace

std::uint64_t isqrt(std::uint64_t x) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  constexpr std::uint64_t kMaxRoot = 0xFFFFFFFFull;
  if (s > kMaxRoot) s = kMaxRoot;
  while (s * s > x) --s;
  while (s < kMaxRoot && (s + 1) * (s + 1) <= x) ++s;
  return s;
}

unsigned __int128 isqrt(unsigned __int128 x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) {
    return isqrt(static_cast<std::uint64_t>(x));
  }
  // long double carries 64 mantissa bits; the estimate is within a few ulps
  // of the root and Newton steps close the gap.
  constexpr u128 kMaxRoot = std::numeric_limits<std::uint64_t>::max();
  u128 s = static_cast<u128>(std::sqrt(static_cast<long double>(x)));
  if (s > kMaxRoot) s = kMaxRoot;
  if (s == 0) s = 1;
  for (int iter = 0; iter < 4; ++iter) {
    const u128 next = (s + x / s) / 2;
    if (next == s) break;
    s = next > kMaxRoot ? kMaxRoot : next;
  }
  while (s * s > x) --s;
  while (s < kMaxRoot && (s + 1) * (s + 1) <= x) ++s;
  return s;
}

WideInt isqrt(const WideInt& x) {
  if (x < 0) throw std::domain_error("isqrt: negative argument");
  if (x <= WideInt(std::numeric_limits<std::uint64_t>::max())) {
    return WideInt(isqrt(x.convert_to<std::uint64_t>()));
  }
  // Newton iteration from an over-estimate decreases monotonically to the floor.
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  WideInt s = WideInt(1) << ((bits + 1) / 2);
  while (true) {
    WideInt next = (s + x / s) >> 1;
    if (next >= s) break;
    s = std::move(next);
  }
  return s;
}

std::int64_t floor_mul_sqrt5(std::int64_t c) {
  if (c >= -kFastLimit && c <= kFastLimit) {
    return static_cast<std::int64_t>(floor_mul_sqrt5_128(c));
  }
  return to_int64(floor_mul_sqrt5(WideInt(c)));
}

WideInt floor_mul_sqrt5(const WideInt& c) {
  if (c == 0) return 0;
  const WideInt root = isqrt(5 * c * c);
  // 5c^2 is not a perfect square for c != 0, so sqrt(5)|c| is never an integer.
  return c > 0 ? root : WideInt(-root - 1);
}

std::int64_t floor_affine_sqrt5(std::int64_t a, std::int64_t b, std::int64_t d,
                                std::int64_t m) {
  if (d <= 0) throw std::invalid_argument("floor_affine_sqrt5: d must be positive");
  const i128 am = i128{a} * m;
  const i128 bm = i128{b} * m;
  if (fits_fast(bm) && fits_fast(am)) {
    const i128 q = floordiv128(am + floor_mul_sqrt5_128(bm), d);
    if (q >= std::numeric_limits<std::int64_t>::min() &&
        q <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(q);
    }
    throw std::overflow_error("floor_affine_sqrt5: result exceeds 64 bits");
  }
  return to_int64(floor_affine_sqrt5(WideInt(a), WideInt(b), WideInt(d), WideInt(m)));
}

WideInt floor_affine_sqrt5(const WideInt& a, const WideInt& b, const WideInt& d,
                           const WideInt& m) {
  if (d <= 0) throw std::invalid_argument("floor_affine_sqrt5: d must be positive");
  return floor_div(a * m + floor_mul_sqrt5(b * m), d);
}

RationalInterval exp_enclosure(unsigned t, unsigned terms) {
  if (t > kFloorExpMaxT) throw std::out_of_range("exp_enclosure: t too large");
  if (terms < 2 * t) throw std::invalid_argument("exp_enclosure: need terms >= 2t");
  // scaled = k! * sum_{j<=k} t^j / j!, built by scaled_k = k*scaled_{k-1} + t^k.
  WideInt scaled = 1;
  WideInt fact = 1;
  WideInt power = 1;
  for (unsigned k = 1; k <= terms; ++k) {
    power *= t;
    fact *= k;
    scaled = scaled * k + power;
  }
  const Rational lo(scaled, fact);
  const Rational tail(2 * power * t, fact * (terms + 1));
  return {lo, lo + tail};
}

WideInt floor_exp(unsigned t) {
  if (t > kFloorExpMaxT) throw std::out_of_range("floor_exp: t too large");
  if (t == 0) return 1;
  // Same recurrence as exp_enclosure, extended one term at a time until both
  // ends of the enclosure share a floor. e^t is irrational for t >= 1, so the
  // loop ends once the tail is smaller than the distance to the next integer.
  const unsigned start = 2 * t;
  WideInt scaled = 1;
  WideInt fact = 1;
  WideInt power = 1;
  for (unsigned k = 1; k <= start; ++k) {
    power *= t;
    fact *= k;
    scaled = scaled * k + power;
  }
  constexpr unsigned kMaxTerms = 1u << 20;
  for (unsigned k = start; k < kMaxTerms; ++k) {
    const WideInt lo_floor = scaled / fact;
    // hi = (scaled*(k+1) + 2 t^(k+1)) / (k+1)!
    const WideInt hi_num = scaled * (k + 1) + 2 * power * t;
    const WideInt hi_den = fact * (k + 1);
    const WideInt hi_floor = hi_num / hi_den;
    if (lo_floor == hi_floor) return lo_floor;
    power *= t;
    fact *= (k + 1);
    scaled = scaled * (k + 1) + power;
  }
  throw std::runtime_error("floor_exp: enclosure did not separate");
}

WideInt floor_of(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r),
                   boost::multiprecision::denominator(r));
}

std::int64_t to_int64(const WideInt& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("value exceeds 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace jaco
