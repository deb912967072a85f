#include "bidegree/outcome.hpp"

#include <array>

namespace bidegree {
namespace {

struct ConditionName {
  Condition condition;
  std::string_view name;
};

constexpr std::array kNames{
    ConditionName{Condition::ZZ, "thm2"},
    ConditionName{Condition::MaxProductLoops, "thm3"},
    ConditionName{Condition::MaxProductNoLoops, "thm4"},
    ConditionName{Condition::MeanMinLoops, "thm5"},
    ConditionName{Condition::MeanMinNoLoops, "thm6"},
    ConditionName{Condition::MultiplicityLoops, "cor2"},
    ConditionName{Condition::MultiplicityNoLoops, "cor3"},
    ConditionName{Condition::HeavyTail, "cor5"},
};

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Graphic: return "GRAPHIC";
    case Verdict::NotGraphic: return "NOT_GRAPHIC";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string_view short_name(Condition c) noexcept {
  for (const auto& entry : kNames) {
    if (entry.condition == c) return entry.name;
  }
  return "?";
}

std::optional<Condition> condition_from_name(std::string_view name) noexcept {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.condition;
  }
  return std::nullopt;
}

bool needs_loops(Condition c) noexcept {
  switch (c) {
    case Condition::MaxProductNoLoops:
    case Condition::MeanMinNoLoops:
    case Condition::MultiplicityNoLoops:
      return false;
    default:
      return true;
  }
}

std::optional<degree_t> Certificate::get(std::string_view name) const {
  for (const auto& [key, value] : parameters) {
    if (key == name) return value;
  }
  return std::nullopt;
}

}  // namespace bidegree
