#include <charconv>
#include <sstream>

#include <json.hpp>

#include "bidegree/cli.hpp"

namespace bidegree::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<degree_t> parse_list(std::string_view text) {
  std::vector<degree_t> values;
  text = trim(text);
  if (text.empty()) throw ParseError("empty degree list");
  for (;;) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    degree_t value = 0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc{} || ptr != last) {
      throw ParseError("not an integer: '" + std::string(item) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return values;
}

std::vector<degree_t> json_list(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const auto& arr = obj.at(key);
  if (!arr.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  std::vector<degree_t> values;
  values.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must hold integers");
    values.push_back(v.get<degree_t>());
  }
  return values;
}

template <typename Range>
void join(std::ostringstream& os, const Range& values) {
  bool first = true;
  for (auto v : values) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
}

}  // namespace

std::optional<SequenceRecord> parse_record(std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() == '#') return std::nullopt;

  if (line.front() == '{') {
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON record: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError("JSON record must be an object");
    return SequenceRecord{json_list(obj, "in"), json_list(obj, "out")};
  }

  const auto semi = line.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected 'in-degrees;out-degrees'");
  if (line.find(';', semi + 1) != std::string_view::npos) throw ParseError("more than one ';'");
  return SequenceRecord{parse_list(line.substr(0, semi)), parse_list(line.substr(semi + 1))};
}

std::string format_record(const SequenceRecord& rec) {
  std::ostringstream os;
  join(os, rec.in);
  os << ';';
  join(os, rec.out);
  return os.str();
}

std::string format_record(const BidegreeSequence& seq) {
  std::ostringstream os;
  join(os, seq.in_degrees());
  os << ';';
  join(os, seq.out_degrees());
  return os.str();
}

std::string format_record_json(const BidegreeSequence& seq) {
  nlohmann::json obj;
  obj["in"] = std::vector<degree_t>(seq.in_degrees().begin(), seq.in_degrees().end());
  obj["out"] = std::vector<degree_t>(seq.out_degrees().begin(), seq.out_degrees().end());
  return obj.dump();
}

std::string format_outcome(const CheckOutcome& outcome, std::string_view method) {
  std::ostringstream os;
  os << to_string(outcome.verdict);
  if (outcome.certificate) {
    os << ' ' << short_name(outcome.certificate->condition);
    for (const auto& [key, value] : outcome.certificate->parameters) os << ' ' << key << '=' << value;
  } else if (outcome.verdict == Verdict::Inconclusive) {
    os << ' ' << method;
  } else if (outcome.reason == FailureReason::SumMismatch) {
    os << " sum_mismatch";
  } else {
    os << " exact";
    if (outcome.witness) os << " j=" << *outcome.witness;
  }
  return os.str();
}

}  // namespace bidegree::cli
