#ifndef QPP_ORACLE_HPP
#define QPP_ORACLE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "qpp/qppinv.hpp"

namespace qpp::oracle {

/// Explicit cost caps; every brute-force routine refuses to exceed them with
/// a resource_limit error instead of silently running away.
struct Budget {
  u64 max_table_modulus = u64{1} << 20;
  u64 max_pair_modulus = 4096;
  u64 max_search_candidates = u64{1} << 28;
};

/// Evaluates P at every residue and checks bijectivity with a seen-mask.
/// Implemented by finite-difference iteration, independent of the structural
/// criteria it cross-checks.
bool brute_is_permutation(const Poly& p, const Budget& budget = {});

struct InverseSearchOptions {
  /// Verify survivors by composing over all N residues instead of the
  /// degree-4 vanishing test, so the oracle does not lean on the lemma it is
  /// meant to check.
  bool pointwise_verify = false;
  /// Enumerate all N^2 candidate pairs instead of solving for g1 per g2.
  bool scan_all_pairs = false;
  Budget budget{};
};

/// All pairs (g1, g2) in [0,N)^2 with g1*y + g2*y^2 == x (mod N) for
/// y = F(x) at every x, sorted ascending. Candidates are pre-filtered by the
/// three-point condition (direct evaluation at x = 0, 1, 2), then verified.
std::vector<QuadCoeffs> brute_quadratic_inverses(
    const QuadraticPP& f, const InverseSearchOptions& options = {});

/// Lowest-degree polynomial (zero constant term, degree <= dmax) whose
/// evaluation table equals the inverse permutation of F; nullopt when no such
/// polynomial exists within dmax. Deterministic: smallest degree first, then
/// the first match in coefficient enumeration order.
std::optional<Poly> brute_min_degree_inverse(const QuadraticPP& f, u32 dmax,
                                             const Budget& budget = {});

struct SweepInstance {
  u64 modulus;
  u64 f1;
  u64 f2;
  std::string what;
};

/// Tally of one oracle sweep. All violation counters must be zero for a
/// clean run; counterexamples lists QPPs whose inverse permutation is matched
/// by no quadratic polynomial (those are expected and not violations).
struct SweepReport {
  u64 lo = 0;
  u64 hi = 0;
  u64 qpps_tested = 0;
  u64 existence_agreements = 0;
  u64 existence_disagreements = 0;
  u64 value_mismatches = 0;
  u64 verification_failures = 0;
  u64 count_law_violations = 0;
  u64 profile_violations = 0;
  u64 no_inverse_instances = 0;
  std::vector<SweepInstance> disagreements;    // capped sample
  std::vector<SweepInstance> counterexamples;  // capped sample

  bool clean() const {
    return existence_disagreements == 0 && value_mismatches == 0 &&
           verification_failures == 0 && count_law_violations == 0 &&
           profile_violations == 0;
  }
  void merge(const SweepReport& other);
};

struct SweepOptions {
  InverseSearchOptions search{};
  std::size_t max_recorded_instances = 16;
  /// Optional restriction of the (f1, f2) space, applied before validation.
  std::function<bool(u64 f1, u64 f2)> filter;
};

/// For every N in [lo, hi] and every quadratic permutation polynomial
/// (f1, f2): compares the existence criterion against the brute-force
/// inverse set, checks the returned values, verifies every inverse
/// pointwise, and checks the candidate count law (1 odd / 2 even) plus the
/// exponent-profile rows.
SweepReport sweep(u64 lo, u64 hi, const SweepOptions& options = {});

}  // namespace qpp::oracle

#endif  // QPP_ORACLE_HPP
