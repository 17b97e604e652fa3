#ifndef QPP_POLYRING_HPP
#define QPP_POLYRING_HPP

#include <string>
#include <utility>
#include <vector>

#include "qpp/modmath.hpp"

namespace qpp {

/// Polynomial over Z_N in canonical form: every coefficient reduced into
/// [0, N), trailing zero coefficients trimmed, the zero polynomial stored as
/// the single coefficient 0. coeffs()[i] is the degree-i coefficient.
class Poly {
 public:
  Poly(u64 modulus, std::vector<u64> coeffs);

  static Poly zero(u64 modulus) { return Poly(modulus, {0}); }
  static Poly identity(u64 modulus) { return Poly(modulus, {0, 1}); }
  static Poly quadratic(u64 modulus, u64 c1, u64 c2) {
    return Poly(modulus, {0, c1, c2});
  }

  u64 modulus() const { return modulus_; }
  const std::vector<u64>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }

  /// Degree-i coefficient; 0 beyond the stored degree.
  u64 coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  bool operator==(const Poly& o) const = default;

 private:
  u64 modulus_;
  std::vector<u64> coeffs_;
};

std::string to_string(const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);

/// Horner evaluation at x in [0, N); raises invalid_input otherwise.
u64 evaluate(const Poly& p, u64 x);

/// Coefficients of outer(inner(x)) reduced mod N. Both polynomials must share
/// a modulus.
Poly compose(const Poly& outer, const Poly& inner);

/// Splits off the constant term: returns (P - c0, c0). The constant only
/// cyclically shifts the permuted values.
std::pair<Poly, u64> normalize_shift(const Poly& p);

/// Given I inverting the shift-normalized polynomial H = H0 - h0, returns
/// J(x) = I(x - h0), which inverts H0.
Poly shift_inverse(const Poly& inverse, u64 h0);

/// One structural condition checked by the permutation criterion; prime == 0
/// for conditions not tied to a single prime factor.
struct PermCondition {
  u64 prime;
  std::string what;
  bool ok;
};

/// Certificate for the permutation-polynomial decision. rule 1 applies when
/// N == 2 (mod 4), rule 2 otherwise; rule 0 marks the exhaustive table check
/// used beyond degree 2.
struct PermCheck {
  bool is_pp = false;
  int rule = 0;
  bool degenerate_linear = false;  // quadratic coefficient is zero
  std::vector<PermCondition> conditions;

  explicit operator bool() const { return is_pp; }
};

/// Decides whether P permutes Z_N. Degree <= 2 goes through the structural
/// per-prime criteria; higher degrees fall back to a full bijection check.
/// A nonzero constant term is stripped first (it cannot change the answer).
PermCheck is_permutation_polynomial(const Poly& p);

/// Same, with the factorization of P's modulus supplied by the caller.
PermCheck is_permutation_polynomial(const Poly& p, const Factorization& nf);

/// Length-N bijection of {0..N-1}; map()[x] is the permuted position of x.
/// Construction verifies bijectivity.
class PermutationTable {
 public:
  PermutationTable(u64 modulus, std::vector<u64> map);

  u64 modulus() const { return modulus_; }
  const std::vector<u64>& map() const { return map_; }
  u64 operator[](u64 x) const { return map_[x]; }

  bool operator==(const PermutationTable& o) const = default;

 private:
  u64 modulus_;
  std::vector<u64> map_;
};

/// map[x] = P(x) for every residue; raises not_permutation when the
/// evaluation map is not a bijection.
PermutationTable permutation_table(const Poly& p);

PermutationTable invert_table(const PermutationTable& t);

/// Validated quadratic permutation polynomial f1*x + f2*x^2 (mod N) with the
/// factorization of N and the per-prime valuations of f2 cached. f2 = 0 is
/// accepted as a degenerate (linear) quadratic.
class QuadraticPP {
 public:
  /// Validates via is_permutation_polynomial; raises not_permutation (or
  /// no_quadratic_pp for a prime modulus != 2 with f2 != 0) on failure.
  /// f1, f2 are reduced mod N.
  static QuadraticPP make(u64 modulus, u64 f1, u64 f2);
  static QuadraticPP make(u64 modulus, u64 f1, u64 f2, const Factorization& nf);

  u64 modulus() const { return modulus_; }
  u64 f1() const { return f1_; }
  u64 f2() const { return f2_; }
  const Factorization& modulus_factors() const { return n_n_; }

  /// Valuation of f2 at modulus_factors().factors[i].prime
  /// (valuation_infinity when f2 == 0).
  u32 f2_valuation(std::size_t i) const { return n_f_[i]; }

  Poly poly() const { return Poly::quadratic(modulus_, f1_, f2_); }

 private:
  QuadraticPP(u64 modulus, u64 f1, u64 f2, Factorization n_n,
              std::vector<u32> n_f)
      : modulus_(modulus), f1_(f1), f2_(f2), n_n_(std::move(n_n)),
        n_f_(std::move(n_f)) {}

  u64 modulus_;
  u64 f1_;
  u64 f2_;
  Factorization n_n_;
  std::vector<u32> n_f_;
};

}  // namespace qpp

#endif  // QPP_POLYRING_HPP
