#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bidegree/core.hpp"

namespace bidegree {

template <typename T>
inline void do_not_optimize(const T& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}

/// Wall time of `fn` per call in nanoseconds, averaged over `batch` calls.
template <typename Fn>
double time_per_call_ns(Fn&& fn, std::size_t batch = 1) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < batch; ++i) do_not_optimize(fn());
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::nano>(stop - start).count() / static_cast<double>(batch);
}

struct TimingSummary {
  double median_ns = 0.0;
  double p99_ns = 0.0;
  std::size_t samples = 0;
};

TimingSummary summarize(std::vector<double> samples);

/// Median over `repetitions` samples of time_per_call_ns(fn, batch).
template <typename Fn>
double median_time_ns(Fn&& fn, std::size_t repetitions, std::size_t batch) {
  std::vector<double> samples;
  samples.reserve(repetitions);
  for (std::size_t r = 0; r < repetitions; ++r) samples.push_back(time_per_call_ns(fn, batch));
  return summarize(std::move(samples)).median_ns;
}

struct ConditionRow {
  std::string name;  ///< thm2..cor5, exact-loops, exact-noloops
  bool loops = true;
  std::size_t certified = 0;
  std::size_t inconclusive = 0;
  std::size_t not_graphic = 0;    ///< exact verdict under the row's loop policy
  std::size_t exact_graphic = 0;  ///< exact verdict under the row's loop policy
  std::size_t violations = 0;     ///< certified but exact says not graphic; always 0
  TimingSummary timing;

  [[nodiscard]] double coverage() const {
    return exact_graphic == 0 ? 0.0 : static_cast<double>(certified) / static_cast<double>(exact_graphic);
  }
};

struct BenchReport {
  std::size_t records = 0;
  std::size_t repeat = 0;
  std::vector<ConditionRow> rows;
};

/// Coverage and timing of every condition over a corpus. Constant-time
/// conditions are timed on precomputed CertificateStats (the O(n) stats
/// pass is excluded); cor5 and the exact checks include their scans.
BenchReport run_bench(std::span<const BidegreeSequence> corpus, std::size_t repeat);

void write_report_csv(std::ostream& os, const BenchReport& report);
void write_report_text(std::ostream& os, const BenchReport& report);

}  // namespace bidegree
