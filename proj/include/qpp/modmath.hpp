#ifndef QPP_MODMATH_HPP
#define QPP_MODMATH_HPP

#include <limits>
#include <vector>

#include "qpp/common.hpp"

namespace qpp {

inline u64 mulmod(u64 a, u64 b, u64 n) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % n);
}

inline u64 addmod(u64 a, u64 b, u64 n) {
  a %= n;
  b %= n;
  u64 s = a + b;  // a, b < n <= 2^32, no overflow
  return s >= n ? s - n : s;
}

inline u64 submod(u64 a, u64 b, u64 n) {
  a %= n;
  b %= n;
  return a >= b ? a - b : a + n - b;
}

/// Least nonnegative residue of a signed value.
inline u64 reduce_signed(i64 v, u64 n) {
  i64 m = static_cast<i64>(n);
  i64 r = v % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

/// gcd(0, n) = n; gcd(0, 0) is undefined and raises invalid_input.
u64 gcd(u64 a, u64 b);

bool is_prime(u64 n);

/// Arithmetic inverse s* with s * s* == 1 (mod m), computed by the extended
/// Euclidean algorithm. Raises no_inverse (detail = gcd) when gcd(s, m) != 1.
u64 arithmetic_inverse(u64 s, u64 m);

/// Solution set of a linear congruence a*u == b (mod n): the full set is
/// { base + k*step : 0 <= k < count } with base in [0, step) and
/// step = n / count.
struct CongruenceSolutions {
  u64 base = 0;
  u64 count = 0;
  u64 step = 0;

  u64 solution(u64 k) const { return base + k * step; }
  bool contains(u64 u) const { return u % step == base && u / step < count; }
};

/// Solves a*u == b (mod n). Negative a or b are reduced into [0, n) first.
/// Solvable iff d = gcd(a, n) divides b; then there are exactly d mutually
/// incongruent solutions. Raises no_solution (detail = d) otherwise.
CongruenceSolutions solve_linear_congruence(i64 a, i64 b, u64 n);

struct PrimePower {
  u64 prime;
  u32 exponent;
};

/// Complete prime factorization; primes strictly increasing, exponents >= 1.
/// The factorization of 1 is the empty list.
struct Factorization {
  std::vector<PrimePower> factors;

  u64 value() const;
};

/// Deterministic trial division up to sqrt(n). Raises invalid_input for n = 0.
Factorization factorize(u64 n);

/// Sentinel for the p-adic valuation of 0, which every prime power divides.
inline constexpr u32 valuation_infinity = std::numeric_limits<u32>::max();

/// Exact p-adic valuation: largest e with p^e | n. Returns valuation_infinity
/// for n = 0. Raises invalid_input when p is not prime.
u32 valuation(u64 n, u64 p);

}  // namespace qpp

#endif  // QPP_MODMATH_HPP
