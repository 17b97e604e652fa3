#include "qpp/modmath.hpp"

#include <numeric>

namespace qpp {

u64 gcd(u64 a, u64 b) {
  if (a == 0 && b == 0)
    throw error(errc::invalid_input, "gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Extended Euclid: returns gcd(s, m) and a Bezout coefficient x with
// s*x == gcd (mod m). Coefficients stay below max(s, m) in magnitude.
struct ExtGcd {
  u64 g;
  i64 x;
};

ExtGcd extended_gcd(u64 s, u64 m) {
  i64 x0 = 1, x1 = 0;
  u64 a = s, b = m;
  while (b != 0) {
    u64 q = a / b;
    u64 r = a % b;
    i64 x2 = x0 - static_cast<i64>(q) * x1;
    a = b;
    b = r;
    x0 = x1;
    x1 = x2;
  }
  return {a, x0};
}

}  // namespace

u64 arithmetic_inverse(u64 s, u64 m) {
  if (m < 2) throw error(errc::invalid_input, "modulus must be >= 2");
  s %= m;
  auto [g, x] = extended_gcd(s, m);
  if (g != 1)
    throw error(errc::no_inverse,
                "no arithmetic inverse: gcd(" + std::to_string(s) + ", " +
                    std::to_string(m) + ") = " + std::to_string(g),
                g);
  return reduce_signed(x, m);
}

CongruenceSolutions solve_linear_congruence(i64 a, i64 b, u64 n) {
  if (n < 2) throw error(errc::invalid_input, "modulus must be >= 2");
  u64 ar = reduce_signed(a, n);
  u64 br = reduce_signed(b, n);
  u64 d = std::gcd(ar, n);  // ar == 0 gives d == n
  if (br % d != 0)
    throw error(errc::no_solution,
                "congruence " + std::to_string(ar) + "*u == " +
                    std::to_string(br) + " (mod " + std::to_string(n) +
                    ") has no solution: " + std::to_string(d) + " does not divide " +
                    std::to_string(br),
                d);
  u64 step = n / d;
  u64 base = 0;
  if (step > 1) {
    // unique solution of (a/d) u == (b/d) (mod n/d)
    u64 inv = arithmetic_inverse(ar / d, step);
    base = mulmod(inv, (br / d) % step, step);
  }
  return {base, d, step};
}

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& [p, e] : factors)
    for (u32 i = 0; i < e; ++i) v *= p;
  return v;
}

Factorization factorize(u64 n) {
  if (n == 0) throw error(errc::invalid_input, "cannot factorize 0");
  Factorization f;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

u32 valuation(u64 n, u64 p) {
  if (!is_prime(p))
    throw error(errc::invalid_input,
                std::to_string(p) + " is not prime", p);
  if (n == 0) return valuation_infinity;
  u32 e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace qpp
