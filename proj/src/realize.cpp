#include "bidegree/realize.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bidegree/exact.hpp"

namespace bidegree {

AdjacencyRealization::AdjacencyRealization(degree_t n, bool loops_allowed)
    : n_(n), loops_allowed_(loops_allowed), words_per_row_((static_cast<std::size_t>(n) + 63) / 64) {
  if (n < 0) throw Error(ErrorCode::InvalidParameters, "matrix dimension must be nonnegative");
  bits_.assign(words_per_row_ * static_cast<std::size_t>(n), 0);
}

bool AdjacencyRealization::test(degree_t row, degree_t col) const {
  return (bits_.at(word(row, col)) >> (col % 64)) & 1u;
}

void AdjacencyRealization::set(degree_t row, degree_t col, bool value) {
  const auto mask = std::uint64_t{1} << (col % 64);
  auto& w = bits_.at(word(row, col));
  w = value ? (w | mask) : (w & ~mask);
}

void AdjacencyRealization::flip(degree_t row, degree_t col) {
  bits_.at(word(row, col)) ^= std::uint64_t{1} << (col % 64);
}

degree_t AdjacencyRealization::row_sum(degree_t row) const {
  degree_t total = 0;
  const auto first = static_cast<std::size_t>(row) * words_per_row_;
  for (std::size_t w = 0; w < words_per_row_; ++w) total += std::popcount(bits_[first + w]);
  return total;
}

std::vector<degree_t> AdjacencyRealization::column_sums() const {
  std::vector<degree_t> sums(static_cast<std::size_t>(n_), 0);
  for (degree_t r = 0; r < n_; ++r) {
    for (degree_t c = 0; c < n_; ++c) sums[static_cast<std::size_t>(c)] += test(r, c);
  }
  return sums;
}

RealizeResult realize(const BidegreeSequence& seq, bool allow_loops) {
  auto verdict = check_exact(seq, allow_loops);
  if (!verdict.graphic()) return {std::move(verdict), std::nullopt};

  const auto n = seq.n();
  const auto len = seq.size();
  std::vector<degree_t> in_left(seq.in_degrees().begin(), seq.in_degrees().end());
  std::vector<degree_t> out_left(seq.out_degrees().begin(), seq.out_degrees().end());

  std::vector<std::size_t> sources(len);
  std::iota(sources.begin(), sources.end(), std::size_t{0});
  std::stable_sort(sources.begin(), sources.end(),
                   [&](std::size_t x, std::size_t y) { return out_left[x] > out_left[y]; });

  AdjacencyRealization matrix(n, allow_loops);
  std::vector<std::size_t> targets;
  targets.reserve(len);
  for (std::size_t src : sources) {
    const auto stubs = static_cast<std::size_t>(out_left[src]);
    if (stubs == 0) break;
    out_left[src] = 0;

    targets.clear();
    for (std::size_t t = 0; t < len; ++t) {
      if (in_left[t] > 0 && (allow_loops || t != src)) targets.push_back(t);
    }
    if (targets.size() < stubs) {
      throw std::logic_error("greedy realization ran out of targets on a sequence the exact check accepted");
    }
    const auto before = [&](std::size_t x, std::size_t y) {
      if (in_left[x] != in_left[y]) return in_left[x] > in_left[y];
      if (!allow_loops && out_left[x] != out_left[y]) return out_left[x] > out_left[y];
      return x < y;
    };
    std::nth_element(targets.begin(), targets.begin() + static_cast<std::ptrdiff_t>(stubs - 1), targets.end(),
                     before);
    for (std::size_t k = 0; k < stubs; ++k) {
      const auto t = targets[k];
      matrix.set(static_cast<degree_t>(t), static_cast<degree_t>(src));
      --in_left[t];
    }
  }

  if (!verify_realization(matrix, seq)) {
    throw std::logic_error("greedy realization produced a matrix with the wrong margins");
  }
  return {std::move(verdict), std::move(matrix)};
}

bool verify_realization(const AdjacencyRealization& real, const BidegreeSequence& seq) {
  if (real.n() != seq.n()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix has n=" + std::to_string(real.n()) +
                                                  ", sequence has n=" + std::to_string(seq.n()));
  }
  const auto n = seq.n();
  for (degree_t i = 0; i < n; ++i) {
    if (real.row_sum(i) != seq.in_degrees()[static_cast<std::size_t>(i)]) return false;
    if (!real.loops_allowed() && real.test(i, i)) return false;
  }
  const auto cols = real.column_sums();
  return std::equal(cols.begin(), cols.end(), seq.out_degrees().begin());
}

}  // namespace bidegree
