#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bidegree/core.hpp"

namespace bidegree {

enum class Verdict { Graphic, NotGraphic, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

/// The constant-time sufficient conditions.
enum class Condition {
  ZZ,                   // a = b, floor((m+M)^2/4) <= mn
  MaxProductLoops,      // Ma*Mb <= S+1
  MaxProductNoLoops,    // (Ma+1)*Mb <= S
  MeanMinLoops,         // max <= min(floor((S-nm)/k)+m, n)
  MeanMinNoLoops,       // max <= min(floor((S-nm)/k)+m, n-1)
  MultiplicityLoops,    // M <= k, Mk <= S
  MultiplicityNoLoops,  // M < k, Mk <= S
  HeavyTail,            // mean/min bound outside an exception set of R nodes
};

/// Short name used on the command line and in reports ("thm3", "cor5", ...).
std::string_view short_name(Condition c) noexcept;
std::optional<Condition> condition_from_name(std::string_view name) noexcept;
/// True for conditions that certify only "graphic with loops".
bool needs_loops(Condition c) noexcept;

struct Certificate {
  Condition condition;
  /// Named integers, in the order they are printed.
  std::vector<std::pair<std::string, degree_t>> parameters;

  [[nodiscard]] std::optional<degree_t> get(std::string_view name) const;
};

enum class FailureReason {
  None,
  Inequality,  ///< witness holds the violated index j
  SumMismatch,
};

struct CheckOutcome {
  Verdict verdict = Verdict::Inconclusive;
  FailureReason reason = FailureReason::None;
  std::optional<degree_t> witness;
  std::optional<Certificate> certificate;
  /// Which condition produced an Inconclusive (or Graphic) answer; empty for
  /// the exact checks.
  std::optional<Condition> tried;

  [[nodiscard]] bool graphic() const noexcept { return verdict == Verdict::Graphic; }

  static CheckOutcome graphic_exact() { return {Verdict::Graphic, FailureReason::None, {}, {}, {}}; }
  static CheckOutcome not_graphic(degree_t j) {
    return {Verdict::NotGraphic, FailureReason::Inequality, j, {}, {}};
  }
  static CheckOutcome certified(Certificate cert) {
    auto c = cert.condition;
    return {Verdict::Graphic, FailureReason::None, {}, std::move(cert), c};
  }
  static CheckOutcome inconclusive(Condition c) {
    return {Verdict::Inconclusive, FailureReason::None, {}, {}, c};
  }
};

}  // namespace bidegree
