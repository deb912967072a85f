#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bidegree/error.hpp"

namespace bidegree {

using degree_t = std::int64_t;

/// Paired in-degree / out-degree vectors of an n-node digraph.
///
/// Construction validates: equal nonzero length, entries in [0..n], and equal
/// sums. Entries equal to n are accepted (legal when loops are allowed); the
/// loop-free checks reject them on their own.
class BidegreeSequence {
 public:
  static BidegreeSequence make(std::vector<degree_t> in_degrees,
                               std::vector<degree_t> out_degrees);

  [[nodiscard]] std::size_t size() const noexcept { return in_.size(); }
  [[nodiscard]] degree_t n() const noexcept { return static_cast<degree_t>(in_.size()); }
  [[nodiscard]] degree_t total() const noexcept { return total_; }

  [[nodiscard]] std::span<const degree_t> in_degrees() const noexcept { return in_; }
  [[nodiscard]] std::span<const degree_t> out_degrees() const noexcept { return out_; }

  friend bool operator==(const BidegreeSequence&, const BidegreeSequence&) = default;

 private:
  BidegreeSequence(std::vector<degree_t> in, std::vector<degree_t> out, degree_t total)
      : in_(std::move(in)), out_(std::move(out)), total_(total) {}

  std::vector<degree_t> in_;
  std::vector<degree_t> out_;
  degree_t total_ = 0;
};

inline BidegreeSequence new_sequence(std::vector<degree_t> in_degrees,
                                     std::vector<degree_t> out_degrees) {
  return BidegreeSequence::make(std::move(in_degrees), std::move(out_degrees));
}

/// Exact integer summary. `total` is the edge count S (= n times the mean
/// degree); the mean itself is never formed.
struct SequenceStats {
  degree_t n = 0;
  degree_t total = 0;
  degree_t min_degree = 0;  ///< over both vectors
  degree_t max_in = 0;
  degree_t max_out = 0;
  degree_t max_degree = 0;

  friend bool operator==(const SequenceStats&, const SequenceStats&) = default;
};

SequenceStats stats(const BidegreeSequence& seq);

/// Joint permutation putting in-degrees non-increasing, ties by out-degree
/// non-increasing, then by original index. order[k] is the original index of
/// the k-th canonical node.
std::vector<std::size_t> canonical_order(const BidegreeSequence& seq);

BidegreeSequence sort_canonical(const BidegreeSequence& seq);

/// F(j, b) = sum_i min(b_i, j) for j in [0..n], built from the Ferrers
/// column counts #(b_z >= i).
struct ConjugateProfile {
  std::vector<degree_t> cumulative;  ///< size n+1
  std::vector<degree_t> counts;      ///< size n+1, counts[0] unused (= n)

  [[nodiscard]] degree_t operator()(degree_t j) const { return cumulative[static_cast<std::size_t>(j)]; }
};

ConjugateProfile conjugate_profile(std::span<const degree_t> out_degrees, degree_t n);

/// Zero-pads a rectangular (row sums, column sums) pair to a square sequence;
/// bipartite realizability equals "graphic with loops" of the result.
BidegreeSequence pad_bipartite(std::vector<degree_t> row_sums, std::vector<degree_t> col_sums);

// Integer helpers shared by the bound formulas.
degree_t isqrt(degree_t x);
degree_t ceil_isqrt(degree_t x);
degree_t floor_div(degree_t num, degree_t den);

}  // namespace bidegree
