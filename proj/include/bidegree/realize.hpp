#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bidegree/core.hpp"
#include "bidegree/outcome.hpp"

namespace bidegree {

/// Dense 0-1 adjacency matrix with bit-packed rows. Entry (i, j) set means an
/// edge from node j to node i, so row sums are in-degrees and column sums
/// out-degrees.
class AdjacencyRealization {
 public:
  AdjacencyRealization(degree_t n, bool loops_allowed);

  [[nodiscard]] degree_t n() const noexcept { return n_; }
  [[nodiscard]] bool loops_allowed() const noexcept { return loops_allowed_; }

  [[nodiscard]] bool test(degree_t row, degree_t col) const;
  void set(degree_t row, degree_t col, bool value = true);
  void flip(degree_t row, degree_t col);

  [[nodiscard]] degree_t row_sum(degree_t row) const;
  [[nodiscard]] std::vector<degree_t> column_sums() const;

  friend bool operator==(const AdjacencyRealization&, const AdjacencyRealization&) = default;

 private:
  [[nodiscard]] std::size_t word(degree_t row, degree_t col) const noexcept {
    return static_cast<std::size_t>(row) * words_per_row_ + static_cast<std::size_t>(col) / 64;
  }

  degree_t n_ = 0;
  bool loops_allowed_ = true;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct RealizeResult {
  CheckOutcome outcome;                          ///< exact verdict
  std::optional<AdjacencyRealization> matrix;    ///< set iff outcome is Graphic
};

/// Greedy wiring: sources in non-increasing out-degree order, each sending its
/// out-stubs to the nodes of largest residual in-degree (loop-free: ties by
/// residual out-degree, then index). The result is in the caller's node
/// order and has been checked with verify_realization.
RealizeResult realize(const BidegreeSequence& seq, bool allow_loops);

bool verify_realization(const AdjacencyRealization& real, const BidegreeSequence& seq);

}  // namespace bidegree
