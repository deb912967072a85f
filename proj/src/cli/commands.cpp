#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "bidegree/bench.hpp"
#include "bidegree/cli.hpp"
#include "bidegree/exact.hpp"
#include "bidegree/generate.hpp"
#include "bidegree/realize.hpp"
#include "bidegree/sufficient.hpp"

namespace bidegree::cli {
namespace {

struct LoopFlags {
  bool loops = false;
  bool no_loops = false;
};

void add_loop_flags(CLI::App* cmd, LoopFlags& flags) {
  auto* on = cmd->add_flag("--loops", flags.loops, "allow self-loops (nonzero diagonal)");
  auto* off = cmd->add_flag("--no-loops", flags.no_loops, "forbid self-loops (default)");
  on->excludes(off);
}

struct InputSource {
  std::string path = "-";
};

// Reads records line by line from a file or the provided stream, invoking
// `handle(line_no, record)` for each. Parse errors are reported and counted.
int for_each_record(const InputSource& src, std::istream& stdin_stream, std::ostream& err,
                    const std::function<void(std::size_t, const SequenceRecord&)>& handle) {
  std::ifstream file;
  std::istream* is = &stdin_stream;
  if (src.path != "-") {
    file.open(src.path);
    if (!file) {
      err << "error: cannot open " << src.path << '\n';
      return 1;
    }
    is = &file;
  }
  int errors = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(*is, line)) {
    ++line_no;
    try {
      if (auto rec = parse_record(line)) handle(line_no, *rec);
    } catch (const ParseError& e) {
      err << "line " << line_no << ": " << e.what() << '\n';
      ++errors;
    }
  }
  return errors;
}

struct Tally {
  bool not_graphic = false;
  bool inconclusive = false;
  bool input_error = false;

  void add(Verdict v) {
    if (v == Verdict::NotGraphic) not_graphic = true;
    if (v == Verdict::Inconclusive) inconclusive = true;
  }
  [[nodiscard]] int exit_code() const {
    if (input_error) return kInputError;
    if (not_graphic) return kNotGraphic;
    if (inconclusive) return kInconclusive;
    return kAllGraphic;
  }
};

// Builds the sequence; sum mismatches and degrees above n are answers
// (NOT_GRAPHIC), everything else is an input error.
std::optional<BidegreeSequence> build(const SequenceRecord& rec, std::size_t line_no, std::ostream& out,
                                      std::ostream& err, Tally& tally) {
  try {
    return BidegreeSequence::make(rec.in, rec.out);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SumMismatch) {
      out << "NOT_GRAPHIC sum_mismatch\n";
      tally.add(Verdict::NotGraphic);
    } else if (e.code() == ErrorCode::DegreeExceedsN) {
      out << "NOT_GRAPHIC degree_exceeds_n\n";
      tally.add(Verdict::NotGraphic);
    } else {
      err << "line " << line_no << ": " << e.what() << '\n';
      tally.input_error = true;
    }
  }
  return std::nullopt;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

struct GeneratorOptions {
  std::string kind;
  degree_t n = 0;
  degree_t total = 0;
  degree_t min = 0;
  degree_t max = 0;
  double exponent = 2.5;
  degree_t max_in = 0;
  degree_t max_out = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
};

const std::map<std::string, GeneratorKind> kKinds{
    {"uniform", GeneratorKind::UniformBounded},
    {"powerlaw", GeneratorKind::PowerLaw},
    {"counterexample1", GeneratorKind::Counterexample1},
    {"extremal", GeneratorKind::ExtremalMinimizer},
};

void add_generator_options(CLI::App* cmd, GeneratorOptions& g) {
  g.seed = default_seed();
  cmd->add_option("--kind", g.kind, "uniform | powerlaw | counterexample1 | extremal")
      ->check(CLI::IsMember({"uniform", "powerlaw", "counterexample1", "extremal"}));
  cmd->add_option("--n", g.n, "number of nodes");
  cmd->add_option("--total", g.total, "edge count S (uniform, extremal)");
  cmd->add_option("--min", g.min, "minimum degree (uniform)");
  cmd->add_option("--max", g.max, "maximum degree (uniform, extremal)");
  cmd->add_option("--exponent", g.exponent, "power-law exponent, > 2");
  cmd->add_option("--Ma", g.max_in, "maximum in-degree (counterexample1)");
  cmd->add_option("--Mb", g.max_out, "maximum out-degree (counterexample1)");
  cmd->add_option("--count", g.count, "number of records");
  cmd->add_option("--seed", g.seed, std::string("base seed; record i uses seed+i (default $") + kSeedEnv + " or 0)");
}

BidegreeSequence generate_one(const GeneratorOptions& g, std::size_t index) {
  GeneratorSpec spec;
  spec.kind = kKinds.at(g.kind);
  spec.n = g.n;
  spec.seed = g.seed + index;
  spec.total = g.total;
  spec.min = g.min;
  spec.max = g.max;
  spec.exponent = g.exponent;
  spec.max_in = g.max_in;
  spec.max_out = g.max_out;
  return generate(spec);
}

int cmd_check(const InputSource& src, const LoopFlags& lf, const std::string& method, bool fallback,
              std::istream& in, std::ostream& out, std::ostream& err) {
  const bool loops = lf.loops;
  std::optional<Condition> condition;
  if (method != "auto" && method != "exact") {
    condition = condition_from_name(method);
    if (condition && needs_loops(*condition) && !loops) {
      err << "error: --method " << method << " certifies graphicality with loops only; pass --loops\n";
      return kInputError;
    }
  }
  Tally tally;
  const int parse_errors = for_each_record(src, in, err, [&](std::size_t line_no, const SequenceRecord& rec) {
    auto seq = build(rec, line_no, out, err, tally);
    if (!seq) return;
    CheckOutcome outcome;
    if (method == "exact") {
      outcome = check_exact(*seq, loops);
    } else if (method == "auto") {
      outcome = certify(*seq, loops, fallback);
    } else {
      outcome = check_condition(*seq, *condition);
      if (!outcome.graphic() && fallback) outcome = check_exact(*seq, loops);
    }
    out << format_outcome(outcome, method) << '\n';
    tally.add(outcome.verdict);
  });
  if (parse_errors > 0) tally.input_error = true;
  return tally.exit_code();
}

int cmd_bound(degree_t n, degree_t m, degree_t total, const std::string& format, std::ostream& out,
              std::ostream& err) {
  BoundTable table;
  try {
    table = bound_table(n, m, total);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  degree_t best = -1;
  for (int J = 2; J <= 6; ++J) {
    if (auto h = table.at(J)) best = std::max(best, *h);
  }
  std::string largest;
  for (int J = 2; J <= 6; ++J) {
    if (table.at(J) == best) largest += (largest.empty() ? "H" : ",H") + std::to_string(J);
  }
  const auto cell = [&](int J) { return table.at(J) ? std::to_string(*table.at(J)) : std::string("n/a"); };

  if (format == "csv") {
    out << "n,m,total,H2,H3,H4,H5,H6,largest\n";
    out << n << ',' << m << ',' << total;
    for (int J = 2; J <= 6; ++J) out << ',' << cell(J);
    out << ",\"" << largest << "\"\n";
  } else {
    for (int J = 2; J <= 6; ++J) out << (J > 2 ? " " : "") << 'H' << J << '=' << cell(J);
    out << "\nlargest=" << largest << '\n';
  }
  return kAllGraphic;
}

int cmd_realize(const InputSource& src, const LoopFlags& lf, const std::string& format, std::istream& in,
                std::ostream& out, std::ostream& err) {
  Tally tally;
  bool first = true;
  const int parse_errors = for_each_record(src, in, err, [&](std::size_t line_no, const SequenceRecord& rec) {
    if (!first) out << '\n';
    first = false;
    auto seq = build(rec, line_no, out, err, tally);
    if (!seq) return;
    const auto result = realize(*seq, lf.loops);
    tally.add(result.outcome.verdict);
    if (!result.matrix) {
      out << "NOT_GRAPHIC j=" << result.outcome.witness.value_or(0) << '\n';
      return;
    }
    const auto& mat = *result.matrix;
    if (format == "edges") {
      // one line per edge, "src dst", grouped by source
      for (degree_t src_node = 0; src_node < mat.n(); ++src_node) {
        for (degree_t dst = 0; dst < mat.n(); ++dst) {
          if (mat.test(dst, src_node)) out << src_node << ' ' << dst << '\n';
        }
      }
    } else {
      for (degree_t r = 0; r < mat.n(); ++r) {
        for (degree_t c = 0; c < mat.n(); ++c) out << (mat.test(r, c) ? '1' : '0');
        out << '\n';
      }
    }
  });
  if (parse_errors > 0) tally.input_error = true;
  return tally.exit_code();
}

int cmd_generate(const GeneratorOptions& g, const std::string& format, std::ostream& out, std::ostream& err) {
  if (g.kind.empty()) {
    err << "error: --kind is required\n";
    return kInputError;
  }
  try {
    for (std::size_t i = 0; i < g.count; ++i) {
      const auto seq = generate_one(g, i);
      out << (format == "json" ? format_record_json(seq) : format_record(seq)) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kAllGraphic;
}

int cmd_bench(const std::string& corpus_path, const GeneratorOptions& g, std::size_t repeat, bool csv,
              std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<BidegreeSequence> corpus;
  if (!corpus_path.empty()) {
    bool bad = false;
    const int parse_errors =
        for_each_record(InputSource{corpus_path}, in, err, [&](std::size_t line_no, const SequenceRecord& rec) {
          try {
            corpus.push_back(BidegreeSequence::make(rec.in, rec.out));
          } catch (const Error& e) {
            err << "line " << line_no << ": " << e.what() << '\n';
            bad = true;
          }
        });
    if (parse_errors > 0 || bad) return kInputError;
  } else if (!g.kind.empty()) {
    try {
      for (std::size_t i = 0; i < g.count; ++i) corpus.push_back(generate_one(g, i));
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  } else {
    err << "error: bench needs --corpus or --kind\n";
    return kInputError;
  }

  const auto report = run_bench(corpus, repeat);
  if (csv) {
    write_report_csv(out, report);
  } else {
    write_report_text(out, report);
  }
  return kAllGraphic;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphicality of directed bidegree sequences"};
  app.require_subcommand(1);

  InputSource check_src;
  LoopFlags check_loops;
  std::string method = "auto";
  bool fallback = false;
  auto* check = app.add_subcommand("check", "decide graphicality of each input record");
  check->add_option("--input", check_src.path, "record file ('-' for stdin)");
  add_loop_flags(check, check_loops);
  check->add_option("--method", method, "exact | thm2..thm6 | cor2 | cor3 | cor5 | auto")
      ->check(CLI::IsMember({"exact", "thm2", "thm3", "thm4", "thm5", "thm6", "cor2", "cor3", "cor5", "auto"}));
  check->add_flag("--fallback-exact", fallback, "run the exact check when no certificate fires");

  degree_t bound_n = 0;
  degree_t bound_m = 0;
  degree_t bound_total = 0;
  std::string bound_format = "text";
  auto* bound = app.add_subcommand("bound", "largest maximum degree each condition certifies");
  bound->add_option("--n", bound_n, "number of nodes")->required();
  bound->add_option("--m", bound_m, "minimum degree")->required();
  bound->add_option("--total", bound_total, "edge count S = n * mean degree")->required();
  bound->add_option("--format", bound_format, "text | csv")->check(CLI::IsMember({"text", "csv"}));

  InputSource realize_src;
  LoopFlags realize_loops;
  std::string realize_format = "dense";
  auto* real = app.add_subcommand("realize", "build a 0-1 adjacency matrix for each graphic record");
  real->add_option("--input", realize_src.path, "record file ('-' for stdin)");
  add_loop_flags(real, realize_loops);
  real->add_option("--format", realize_format, "dense | edges")->check(CLI::IsMember({"dense", "edges"}));

  GeneratorOptions gen_opts;
  std::string gen_format = "plain";
  auto* gen = app.add_subcommand("generate", "emit seeded random or adversarial records");
  add_generator_options(gen, gen_opts);
  gen->add_option("--format", gen_format, "plain | json")->check(CLI::IsMember({"plain", "json"}));

  GeneratorOptions bench_opts;
  std::string corpus;
  std::size_t repeat = 5;
  bool csv = false;
  auto* bench = app.add_subcommand("bench", "coverage and timing of every condition over a corpus");
  bench->add_option("--corpus", corpus, "record file ('-' for stdin)");
  add_generator_options(bench, bench_opts);
  bench->add_option("--repeat", repeat, "timing samples per record and condition");
  bench->add_flag("--csv", csv, "CSV instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  if (*check) return cmd_check(check_src, check_loops, method, fallback, in, out, err);
  if (*bound) return cmd_bound(bound_n, bound_m, bound_total, bound_format, out, err);
  if (*real) return cmd_realize(realize_src, realize_loops, realize_format, in, out, err);
  if (*gen) return cmd_generate(gen_opts, gen_format, out, err);
  if (*bench) return cmd_bench(corpus, bench_opts, repeat, csv, in, out, err);
  return kInputError;
}

}  // namespace bidegree::cli
