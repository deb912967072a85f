#include "bidegree/exact.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

namespace bidegree {
namespace {

// Calls visit(j, lhs, rhs) for j = 1..n-1 over the canonically sorted pairs
// until it returns false.
template <typename Visit>
void scan_inequalities(const BidegreeSequence& seq, bool allow_loops, Visit&& visit) {
  const auto order = canonical_order(seq);
  const auto n = seq.n();
  const auto in = seq.in_degrees();
  const auto out = seq.out_degrees();
  const auto profile = conjugate_profile(out, n);

  if (allow_loops) {
    assert(profile(n) == seq.total());
    degree_t prefix = 0;
    for (degree_t j = 1; j < n; ++j) {
      prefix += in[order[static_cast<std::size_t>(j - 1)]];
      if (!visit(j, profile(j), prefix)) return;
    }
    return;
  }

  // lhs(j) = F(j) - #{i <= j : b_i >= j}; the count is maintained with a
  // histogram of the out-degrees already passed.
  std::vector<degree_t> seen(static_cast<std::size_t>(n) + 1, 0);
  degree_t capped = 0;  // #{i <= j : b_i >= j}
  degree_t prefix = 0;
  for (degree_t j = 1; j < n; ++j) {
    const auto idx = order[static_cast<std::size_t>(j - 1)];
    capped -= seen[static_cast<std::size_t>(j - 1)];
    if (out[idx] >= j) ++capped;
    ++seen[static_cast<std::size_t>(out[idx])];
    prefix += in[idx];
    if (!visit(j, profile(j) - capped, prefix)) return;
  }
}

bool has_full_entry(const BidegreeSequence& seq) {
  const auto n = seq.n();
  const auto full = [n](degree_t d) { return d == n; };
  return std::any_of(seq.in_degrees().begin(), seq.in_degrees().end(), full) ||
         std::any_of(seq.out_degrees().begin(), seq.out_degrees().end(), full);
}

}  // namespace

CheckOutcome check_with_loops(const BidegreeSequence& seq) {
  std::optional<degree_t> witness;
  scan_inequalities(seq, true, [&](degree_t j, degree_t lhs, degree_t rhs) {
    if (lhs < rhs) witness = j;
    return !witness;
  });
  return witness ? CheckOutcome::not_graphic(*witness) : CheckOutcome::graphic_exact();
}

CheckOutcome check_no_loops(const BidegreeSequence& seq) {
  std::optional<degree_t> witness;
  scan_inequalities(seq, false, [&](degree_t j, degree_t lhs, degree_t rhs) {
    if (lhs < rhs) witness = j;
    return !witness;
  });
  // the j = n inequality (sum of min(b_i, n-1) >= S) only bites when an entry
  // equals n and nothing earlier failed
  if (!witness && has_full_entry(seq)) witness = seq.n();
  return witness ? CheckOutcome::not_graphic(*witness) : CheckOutcome::graphic_exact();
}

std::vector<degree_t> violated_indices(const BidegreeSequence& seq, bool allow_loops) {
  std::vector<degree_t> out;
  scan_inequalities(seq, allow_loops, [&](degree_t j, degree_t lhs, degree_t rhs) {
    if (lhs < rhs) out.push_back(j);
    return true;
  });
  if (!allow_loops && out.empty() && has_full_entry(seq)) out.push_back(seq.n());
  return out;
}

namespace {

struct MatrixSearch {
  std::vector<degree_t> rows;
  std::vector<degree_t> col_left;
  bool allow_loops = true;
  unsigned n = 0;

  bool place(unsigned row) {
    if (row == n) {
      return std::all_of(col_left.begin(), col_left.end(), [](degree_t c) { return c == 0; });
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != rows[row]) continue;
      if (!allow_loops && (mask >> row & 1u)) continue;
      bool fits = true;
      for (unsigned c = 0; c < n && fits; ++c) {
        if ((mask >> c & 1u) && col_left[c] == 0) fits = false;
      }
      if (!fits) continue;
      for (unsigned c = 0; c < n; ++c) col_left[c] -= (mask >> c & 1u);
      const bool ok = place(row + 1);
      for (unsigned c = 0; c < n; ++c) col_left[c] += (mask >> c & 1u);
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

bool brute_force_exists(const BidegreeSequence& seq, bool allow_loops, std::optional<degree_t> cap) {
  const degree_t limit = cap.value_or(allow_loops ? kBruteForceCapLoops : kBruteForceCapNoLoops);
  if (seq.n() > limit || seq.n() > 16) {
    throw Error(ErrorCode::InstanceTooLarge,
                "brute force limited to n <= " + std::to_string(limit) + ", got n=" + std::to_string(seq.n()));
  }
  MatrixSearch search;
  search.n = static_cast<unsigned>(seq.n());
  search.rows.assign(seq.in_degrees().begin(), seq.in_degrees().end());
  search.col_left.assign(seq.out_degrees().begin(), seq.out_degrees().end());
  search.allow_loops = allow_loops;
  return search.place(0);
}

}  // namespace bidegree
