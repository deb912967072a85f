#pragma once

#include <optional>
#include <vector>

#include "bidegree/core.hpp"
#include "bidegree/outcome.hpp"

namespace bidegree {

/// Gale-Ryser / Fulkerson test for realizability by a 0-1 matrix with any
/// diagonal. O(n log n) for the sort, O(n) after it.
CheckOutcome check_with_loops(const BidegreeSequence& seq);

/// Fulkerson-Chen-Anstee test for realizability with a zero diagonal. Pairs
/// are co-sorted so the first j out-degrees belong to the j largest
/// in-degrees.
CheckOutcome check_no_loops(const BidegreeSequence& seq);

inline CheckOutcome check_exact(const BidegreeSequence& seq, bool allow_loops) {
  return allow_loops ? check_with_loops(seq) : check_no_loops(seq);
}

/// Every j in [1..n-1] (in canonical order) where the relevant inequality
/// fails. For loop-free checks on sequences with an entry equal to n and no
/// failing j below n, the list is {n}.
std::vector<degree_t> violated_indices(const BidegreeSequence& seq, bool allow_loops);

inline constexpr degree_t kBruteForceCapLoops = 4;
inline constexpr degree_t kBruteForceCapNoLoops = 5;

/// Ground truth by exhaustive search over 0-1 matrices (row by row, each row
/// any subset of the right size). Throws InstanceTooLarge above the cap.
bool brute_force_exists(const BidegreeSequence& seq, bool allow_loops,
                        std::optional<degree_t> cap = std::nullopt);

}  // namespace bidegree
