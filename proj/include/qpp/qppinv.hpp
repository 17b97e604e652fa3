#ifndef QPP_QPPINV_HPP
#define QPP_QPPINV_HPP

#include <vector>

#include "qpp/polyring.hpp"

namespace qpp {

struct QuadCoeffs {
  u64 g1 = 0;
  u64 g2 = 0;

  bool operator==(const QuadCoeffs&) const = default;
  auto operator<=>(const QuadCoeffs&) const = default;
};

/// Zero, one or two quadratic coefficient sets. One candidate for odd N, two
/// for even N (the second is the first shifted by N/2 in both coefficients);
/// empty means no quadratic inverse exists.
struct InverseOutcome {
  std::vector<QuadCoeffs> candidates;

  enum class Kind { none, one, two };
  Kind kind() const {
    return candidates.empty() ? Kind::none
           : candidates.size() == 1 ? Kind::one : Kind::two;
  }
  bool empty() const { return candidates.empty(); }
};

/// The quadratic polynomial(s) inverting F at x = 0, 1, 2, obtained by
/// solving the linear congruences
///   g2 * (f1+f2)(f1+2*f2)(f1+3*f2) == -f2   (mod N)    [odd N]
///   g2 * (f1+f2)(f1+2*f2)(f1+3*f2) == -f2   (mod N/2)  [even N]
///   g1 * (f1+f2) == 1 - g2*(f1+f2)^2        (mod N)
/// Odd N yields exactly one candidate, even N exactly two. For even N the
/// first candidate carries the least nonnegative g2 solution of the mod-N/2
/// congruence; the second adds N/2 to both coefficients.
InverseOutcome partial_inverse(const QuadraticPP& f);

struct ExistenceRow {
  u64 prime;
  u32 n_n;        // exponent of prime in N
  u32 n_f;        // exponent of prime in f2 (valuation_infinity when f2 = 0)
  u32 threshold;  // required lower bound on n_f
  bool satisfied;
};

/// Existence decision for a quadratic inverse, one row per prime factor of N.
/// Thresholds: p = 2 -> max(ceil((n_N2 - 2) / 2), 1) when n_N2 > 1, else 0;
/// p = 3 -> max(ceil((n_N3 - 1) / 2), 1); p >= 5 -> ceil(n_Np / 2).
struct ExistenceReport {
  bool exists = true;
  std::vector<ExistenceRow> rows;
};

ExistenceReport exists_quadratic_inverse(const QuadraticPP& f);

/// Full inverse construction: empty outcome when the existence criterion
/// fails, otherwise the partial-inverse candidates, which are then guaranteed
/// to be true inverses. With verify = true each returned candidate is
/// re-checked via is_inverse_pair; a failure there would falsify the
/// implementation and raises logic_error.
InverseOutcome quadratic_inverse(const QuadraticPP& f, bool verify = false);

/// For T of degree <= 4 with zero constant term and T(0) == T(1) == T(2) == 0
/// (mod N), decides whether T vanishes at every residue; equivalent to
/// 24*t4 == 0 and 6*t3 + 36*t4 == 0 (mod N). Raises invalid_input when the
/// three-point precondition fails, naming the failing point.
bool quartic_vanishes(const Poly& t);

/// True iff the zero-constant quadratic G inverts F at every residue:
/// G agrees with an inverse at x in {0, 1, 2} and 12*f2*g2 == 0 (mod N).
bool is_inverse_pair(const QuadraticPP& f, const Poly& g);

/// Relation between the valuations of g2 and f2 forced at one prime factor.
struct ProfileRow {
  enum class Relation { equal, at_least };

  u64 prime;
  u32 n_n;
  u32 n_f;
  u32 n_g;
  Relation relation;
  u32 expected;  // expected n_g value (equal) or lower bound (at_least)
  bool holds;
};

/// Per-prime exponent diagnostics for a partial-inverse candidate G of F:
/// with b = n_Np - 1 for p = 2 and b = n_Np otherwise, n_Gp = n_Fp when
/// 1 <= n_Fp < b, and n_Gp >= b when n_Fp >= b. p = 2 is skipped when
/// n_N2 = 1 (nothing is forced there).
std::vector<ProfileRow> exponent_profile(const QuadraticPP& f, const Poly& g);

/// True iff F inverts itself, letting one table serve both directions.
bool is_self_inverse(const QuadraticPP& f);

}  // namespace qpp

#endif  // QPP_QPPINV_HPP
