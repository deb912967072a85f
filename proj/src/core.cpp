#include "bidegree/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace bidegree {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::DegreeExceedsN: return "DegreeExceedsN";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::InvalidStats: return "InvalidStats";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

BidegreeSequence BidegreeSequence::make(std::vector<degree_t> in_degrees,
                                        std::vector<degree_t> out_degrees) {
  if (in_degrees.size() != out_degrees.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "in-degree vector has " + std::to_string(in_degrees.size()) +
                    " entries, out-degree vector has " + std::to_string(out_degrees.size()));
  }
  if (in_degrees.empty()) throw Error(ErrorCode::EmptySequence, "sequence must have at least one node");

  const auto n = static_cast<degree_t>(in_degrees.size());
  degree_t sum_in = 0;
  degree_t sum_out = 0;
  for (std::size_t i = 0; i < in_degrees.size(); ++i) {
    for (degree_t d : {in_degrees[i], out_degrees[i]}) {
      if (d < 0) throw Error(ErrorCode::NegativeDegree, "negative degree at node " + std::to_string(i));
      if (d > n) {
        throw Error(ErrorCode::DegreeExceedsN,
                    "degree " + std::to_string(d) + " at node " + std::to_string(i) +
                        " exceeds n=" + std::to_string(n));
      }
    }
    sum_in += in_degrees[i];
    sum_out += out_degrees[i];
  }
  if (sum_in != sum_out) {
    throw Error(ErrorCode::SumMismatch,
                "in-degree sum " + std::to_string(sum_in) + " != out-degree sum " + std::to_string(sum_out));
  }
  return BidegreeSequence(std::move(in_degrees), std::move(out_degrees), sum_in);
}

SequenceStats stats(const BidegreeSequence& seq) {
  const auto a = seq.in_degrees();
  const auto b = seq.out_degrees();
  SequenceStats s;
  s.n = seq.n();
  s.total = seq.total();
  s.max_in = *std::max_element(a.begin(), a.end());
  s.max_out = *std::max_element(b.begin(), b.end());
  s.max_degree = std::max(s.max_in, s.max_out);
  s.min_degree = std::min(*std::min_element(a.begin(), a.end()), *std::min_element(b.begin(), b.end()));
  return s;
}

std::vector<std::size_t> canonical_order(const BidegreeSequence& seq) {
  const auto a = seq.in_degrees();
  const auto b = seq.out_degrees();
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (a[x] != a[y]) return a[x] > a[y];
    return b[x] > b[y];
  });
  return order;
}

BidegreeSequence sort_canonical(const BidegreeSequence& seq) {
  const auto order = canonical_order(seq);
  std::vector<degree_t> a(order.size());
  std::vector<degree_t> b(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    a[k] = seq.in_degrees()[order[k]];
    b[k] = seq.out_degrees()[order[k]];
  }
  return BidegreeSequence::make(std::move(a), std::move(b));
}

ConjugateProfile conjugate_profile(std::span<const degree_t> out_degrees, degree_t n) {
  if (n < 0) throw Error(ErrorCode::EntryOutOfRange, "n must be nonnegative");
  const auto len = static_cast<std::size_t>(n) + 1;
  ConjugateProfile p;
  p.counts.assign(len, 0);
  p.cumulative.assign(len, 0);

  // histogram, then suffix sums turn it into #(b_z >= i)
  for (degree_t d : out_degrees) {
    if (d < 0 || d > n) {
      throw Error(ErrorCode::EntryOutOfRange,
                  "out-degree " + std::to_string(d) + " outside [0.." + std::to_string(n) + "]");
    }
    ++p.counts[static_cast<std::size_t>(d)];
  }
  for (std::size_t i = len - 1; i > 0; --i) p.counts[i - 1] += p.counts[i];
  for (std::size_t j = 1; j < len; ++j) p.cumulative[j] = p.cumulative[j - 1] + p.counts[j];
  return p;
}

BidegreeSequence pad_bipartite(std::vector<degree_t> row_sums, std::vector<degree_t> col_sums) {
  const degree_t rows = std::accumulate(row_sums.begin(), row_sums.end(), degree_t{0});
  const degree_t cols = std::accumulate(col_sums.begin(), col_sums.end(), degree_t{0});
  if (rows != cols) {
    throw Error(ErrorCode::SumMismatch,
                "row sum total " + std::to_string(rows) + " != column sum total " + std::to_string(cols));
  }
  const auto n = std::max(row_sums.size(), col_sums.size());
  row_sums.resize(n, 0);
  col_sums.resize(n, 0);
  return BidegreeSequence::make(std::move(row_sums), std::move(col_sums));
}

degree_t isqrt(degree_t x) {
  if (x < 0) throw Error(ErrorCode::InvalidParameters, "isqrt of negative value");
  auto r = static_cast<degree_t>(std::sqrt(static_cast<long double>(x)));
  // fix up the floating estimate so that r*r <= x < (r+1)*(r+1)
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

degree_t ceil_isqrt(degree_t x) {
  const degree_t r = isqrt(x);
  return r * r == x ? r : r + 1;
}

degree_t floor_div(degree_t num, degree_t den) {
  degree_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace bidegree
