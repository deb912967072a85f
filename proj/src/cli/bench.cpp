#include "bidegree/bench.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "bidegree/exact.hpp"
#include "bidegree/outcome.hpp"
#include "bidegree/sufficient.hpp"

namespace bidegree {
namespace {

constexpr std::size_t kConstantTimeBatch = 64;

constexpr Condition kAllConditions[] = {
    Condition::ZZ,           Condition::MaxProductLoops,   Condition::MaxProductNoLoops,
    Condition::MeanMinLoops, Condition::MeanMinNoLoops,    Condition::MultiplicityLoops,
    Condition::MultiplicityNoLoops, Condition::HeavyTail,
};

CheckOutcome run_condition(Condition c, const CertificateStats& cs, const BidegreeSequence& seq) {
  switch (c) {
    case Condition::ZZ: return check_thm2(cs);
    case Condition::MaxProductLoops: return check_thm3(cs);
    case Condition::MaxProductNoLoops: return check_thm4(cs);
    case Condition::MeanMinLoops: return check_thm5(cs);
    case Condition::MeanMinNoLoops: return check_thm6(cs);
    case Condition::MultiplicityLoops: return check_cor2(cs);
    case Condition::MultiplicityNoLoops: return check_cor3(cs);
    case Condition::HeavyTail: return check_cor5(seq);
  }
  return CheckOutcome::inconclusive(c);
}

}  // namespace

TimingSummary summarize(std::vector<double> samples) {
  TimingSummary t;
  t.samples = samples.size();
  if (samples.empty()) return t;
  std::sort(samples.begin(), samples.end());
  const auto mid = samples.size() / 2;
  t.median_ns = samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
  const auto rank = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(samples.size())));
  t.p99_ns = samples[std::clamp<std::size_t>(rank, 1, samples.size()) - 1];
  return t;
}

BenchReport run_bench(std::span<const BidegreeSequence> corpus, std::size_t repeat) {
  BenchReport report;
  report.records = corpus.size();
  report.repeat = repeat;
  if (corpus.empty()) return report;

  const std::size_t conditions = std::size(kAllConditions);
  std::vector<ConditionRow> rows(conditions + 2);
  std::vector<std::vector<double>> samples(rows.size());
  for (std::size_t c = 0; c < conditions; ++c) {
    rows[c].name = std::string(short_name(kAllConditions[c]));
    rows[c].loops = needs_loops(kAllConditions[c]);
  }
  rows[conditions].name = "exact-loops";
  rows[conditions + 1].name = "exact-noloops";
  rows[conditions + 1].loops = false;

  for (const auto& seq : corpus) {
    const auto cs = certificate_stats(seq);
    const bool graphic_loops = check_with_loops(seq).graphic();
    const bool graphic_plain = check_no_loops(seq).graphic();

    for (std::size_t c = 0; c < conditions; ++c) {
      const Condition cond = kAllConditions[c];
      auto& row = rows[c];
      const bool exact = row.loops ? graphic_loops : graphic_plain;
      (exact ? row.exact_graphic : row.not_graphic)++;
      const auto outcome = run_condition(cond, cs, seq);
      if (outcome.graphic()) {
        ++row.certified;
        if (!exact) ++row.violations;
      } else {
        ++row.inconclusive;
      }
      const std::size_t batch = cond == Condition::HeavyTail ? 1 : kConstantTimeBatch;
      for (std::size_t r = 0; r < repeat; ++r) {
        samples[c].push_back(time_per_call_ns([&] { return run_condition(cond, cs, seq).verdict; }, batch));
      }
    }

    for (std::size_t e = 0; e < 2; ++e) {
      auto& row = rows[conditions + e];
      const bool exact = row.loops ? graphic_loops : graphic_plain;
      (exact ? row.exact_graphic : row.not_graphic)++;
      (exact ? row.certified : row.inconclusive)++;
      for (std::size_t r = 0; r < repeat; ++r) {
        samples[conditions + e].push_back(
            time_per_call_ns([&] { return check_exact(seq, row.loops).verdict; }, 1));
      }
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].timing = summarize(std::move(samples[i]));
  // the exact rows have no "inconclusive"; their misses are not-graphic
  rows[conditions].inconclusive = rows[conditions + 1].inconclusive = 0;
  report.rows = std::move(rows);
  return report;
}

void write_report_csv(std::ostream& os, const BenchReport& report) {
  os << "condition,loops,certified,inconclusive,not_graphic,exact_graphic,violations,coverage,median_ns,p99_ns\n";
  for (const auto& row : report.rows) {
    os << row.name << ',' << (row.loops ? 1 : 0) << ',' << row.certified << ',' << row.inconclusive << ','
       << row.not_graphic << ',' << row.exact_graphic << ',' << row.violations << ',' << std::fixed
       << std::setprecision(4) << row.coverage() << ',' << std::setprecision(1) << row.timing.median_ns << ','
       << row.timing.p99_ns << '\n';
    os.unsetf(std::ios::floatfield);
  }
}

void write_report_text(std::ostream& os, const BenchReport& report) {
  os << "records: " << report.records << "  repeat: " << report.repeat << '\n';
  os << "timing: constant-time conditions on precomputed stats (stats pass excluded); "
        "cor5 and exact include their O(n) scans\n";
  if (report.rows.empty()) return;
  os << std::left << std::setw(15) << "condition" << std::setw(7) << "loops" << std::right << std::setw(10)
     << "certified" << std::setw(13) << "inconclusive" << std::setw(12) << "not_graphic" << std::setw(12)
     << "coverage" << std::setw(13) << "median_ns" << std::setw(13) << "p99_ns" << '\n';
  for (const auto& row : report.rows) {
    os << std::left << std::setw(15) << row.name << std::setw(7) << (row.loops ? "yes" : "no") << std::right
       << std::setw(10) << row.certified << std::setw(13) << row.inconclusive << std::setw(12) << row.not_graphic
       << std::setw(12) << std::fixed << std::setprecision(4) << row.coverage() << std::setw(13)
       << std::setprecision(1) << row.timing.median_ns << std::setw(13) << row.timing.p99_ns << '\n';
    os.unsetf(std::ios::floatfield);
  }
}

}  // namespace bidegree
