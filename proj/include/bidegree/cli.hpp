#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bidegree/core.hpp"
#include "bidegree/outcome.hpp"

namespace bidegree::cli {

/// One line of input: either `a1,...,an;b1,...,bn` or a JSON object
/// {"in": [...], "out": [...]}. Values are not validated beyond being
/// integers; building a BidegreeSequence does that.
struct SequenceRecord {
  std::vector<degree_t> in;
  std::vector<degree_t> out;

  friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns nullopt for blank lines and `#` comments.
std::optional<SequenceRecord> parse_record(std::string_view line);

std::string format_record(const SequenceRecord& rec);
std::string format_record(const BidegreeSequence& seq);
std::string format_record_json(const BidegreeSequence& seq);

/// `GRAPHIC thm5 k=6 Mmax=6`, `NOT_GRAPHIC exact j=3`, `INCONCLUSIVE thm3`.
std::string format_outcome(const CheckOutcome& outcome, std::string_view method);

enum ExitCode : int {
  kAllGraphic = 0,
  kNotGraphic = 1,
  kInconclusive = 2,
  kInputError = 3,
};

/// Environment variable consulted for the default generator seed.
inline constexpr const char* kSeedEnv = "BIDEGREE_SEED";

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bidegree::cli
