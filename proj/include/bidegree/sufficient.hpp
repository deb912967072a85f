#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bidegree/core.hpp"
#include "bidegree/outcome.hpp"

namespace bidegree {

/// k = ceil(k*) where k* is the larger root controlling how many leading
/// inequalities bind; k = 1 when the root is not real.
struct KStar {
  degree_t k = 1;
  bool real = false;

  friend bool operator==(const KStar&, const KStar&) = default;
};

/// k* = m + sqrt(m^2 + S - 2mn). Requires 1 <= m <= n and nm <= S.
KStar kstar_with_loops(degree_t n, degree_t total, degree_t m);
/// k* = m + 1 + sqrt((m+1)^2 + S - 2mn). Requires 1 <= m <= n-1 and nm <= S.
KStar kstar_no_loops(degree_t n, degree_t total, degree_t m);

/// Everything the constant-time conditions read. Building it is O(n); each
/// condition evaluated on it is O(1).
struct CertificateStats {
  SequenceStats stats;
  bool symmetric = false;     ///< a_i == b_i for every i
  degree_t top_in_count = 0;  ///< #(a_i == max_degree)
};

CertificateStats certificate_stats(const BidegreeSequence& seq);

CheckOutcome check_thm2(const CertificateStats& cs);
CheckOutcome check_thm3(const CertificateStats& cs);
CheckOutcome check_thm4(const CertificateStats& cs);
CheckOutcome check_thm5(const CertificateStats& cs);
CheckOutcome check_thm6(const CertificateStats& cs);
CheckOutcome check_cor2(const CertificateStats& cs);
CheckOutcome check_cor3(const CertificateStats& cs);

CheckOutcome check_thm2(const BidegreeSequence& seq);
CheckOutcome check_thm3(const BidegreeSequence& seq);
CheckOutcome check_thm4(const BidegreeSequence& seq);
CheckOutcome check_thm5(const BidegreeSequence& seq);
CheckOutcome check_thm6(const BidegreeSequence& seq);
CheckOutcome check_cor2(const BidegreeSequence& seq);
CheckOutcome check_cor3(const BidegreeSequence& seq);

/// Mean/min bound applied outside an exception set of the R largest
/// in-degree nodes. Scans R upward; O(n) after the canonical sort.
CheckOutcome check_cor5(const BidegreeSequence& seq);

/// Dispatch by condition.
CheckOutcome check_condition(const BidegreeSequence& seq, Condition c);

/// Largest M with M(M+1) <= S (the equal-maxima form of the loop-free
/// product bound).
degree_t max_product_no_loops_bound(degree_t total);

/// Pointwise minimizer of F(j, .) among out-degree vectors with n slots, sum
/// S, entries in [m..M]: k entries M, one remainder r, the rest m.
std::vector<degree_t> minimizer_b_star(degree_t n, degree_t total, degree_t max, degree_t min = 0);

/// Largest maximum degree each condition certifies for given (n, m, S).
/// Index with at(J) for J in [2..6]; the mean/min entries are empty when
/// their minimum-degree hypothesis fails.
struct BoundTable {
  degree_t n = 0;
  degree_t m = 0;
  degree_t total = 0;
  std::array<std::optional<degree_t>, 5> h{};

  [[nodiscard]] std::optional<degree_t> at(int J) const { return h.at(static_cast<std::size_t>(J - 2)); }
};

BoundTable bound_table(degree_t n, degree_t m, degree_t total);

/// Cheapest-first ladder over the applicable conditions; only the exact
/// fallback can answer NotGraphic.
CheckOutcome certify(const BidegreeSequence& seq, bool allow_loops, bool fallback_exact);

/// The ladder order used by certify().
std::vector<Condition> certificate_ladder(bool allow_loops);

}  // namespace bidegree
