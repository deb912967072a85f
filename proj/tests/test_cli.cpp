#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bidegree/cli.hpp"
#include "bidegree/exact.hpp"
#include "bidegree/generate.hpp"
#include "doctest.h"

using namespace bidegree;
using namespace bidegree::cli;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "bidegree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kWorkedRecord = "6,6,6,6,6,4,2,2,1,1;6,6,6,6,6,4,2,2,1,1\n";
const std::string kCounterRecord = "2,2,2,0;4,2,0,0\n";

}  // namespace

TEST_CASE("parse_record accepts plain and JSON lines") {
  const auto plain = parse_record("1,2 , 3;3,+2,1");
  REQUIRE(plain.has_value());
  CHECK(plain->in == std::vector<degree_t>{1, 2, 3});
  CHECK(plain->out == std::vector<degree_t>{3, 2, 1});

  const auto json = parse_record(R"({"in": [2, 2, 2, 0], "out": [4, 2, 0, 0]})");
  REQUIRE(json.has_value());
  CHECK(json->out == std::vector<degree_t>{4, 2, 0, 0});

  CHECK_FALSE(parse_record("").has_value());
  CHECK_FALSE(parse_record("   ").has_value());
  CHECK_FALSE(parse_record("# comment").has_value());
}

TEST_CASE("parse_record rejects malformed lines") {
  CHECK_THROWS_AS(parse_record("1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_record("1,x;1,1"), ParseError);
  CHECK_THROWS_AS(parse_record("1,,2;1,2"), ParseError);
  CHECK_THROWS_AS(parse_record("1;1;1"), ParseError);
  CHECK_THROWS_AS(parse_record(R"({"in": [1]})"), ParseError);
  CHECK_THROWS_AS(parse_record(R"({"in": [1], "out": ["a"]})"), ParseError);
  CHECK_THROWS_AS(parse_record("{not json"), ParseError);
}

TEST_CASE("property: format then parse is the identity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    SequenceRecord rec;
    const std::size_t n = 1 + rng() % 20;
    for (std::size_t i = 0; i < n; ++i) {
      rec.in.push_back(static_cast<degree_t>(rng() % 1000));
      rec.out.push_back(static_cast<degree_t>(rng() % 1000));
    }
    CHECK(parse_record(format_record(rec)) == rec);
  }
  const auto seq = gen_uniform(12, 30, 1, 5, 2);
  const auto back = parse_record(format_record_json(seq));
  REQUIRE(back.has_value());
  CHECK(new_sequence(back->in, back->out) == seq);
}

TEST_CASE("check: golden outputs and exit codes") {
  auto r = run_cli({"check", "--loops", "--method", "thm5"}, kWorkedRecord);
  CHECK(r.out == "GRAPHIC thm5 k=6 Mmax=6\n");
  CHECK(r.code == kAllGraphic);

  r = run_cli({"check", "--loops", "--method", "auto", "--fallback-exact"}, kCounterRecord);
  CHECK(r.out == "NOT_GRAPHIC exact j=3\n");
  CHECK(r.code == kNotGraphic);

  r = run_cli({"check", "--loops", "--method", "thm3"}, kCounterRecord);
  CHECK(r.out == "INCONCLUSIVE thm3\n");
  CHECK(r.code == kInconclusive);

  r = run_cli({"check", "--no-loops", "--method", "exact"}, "1,1;1,1\n");
  CHECK(r.out == "GRAPHIC exact\n");
  CHECK(r.code == kAllGraphic);
}

TEST_CASE("check: worst verdict decides the exit code") {
  auto r = run_cli({"check", "--loops", "--method", "thm3"}, kWorkedRecord + kCounterRecord);
  CHECK(r.out == "GRAPHIC thm3 MaMb=36 bound=41\nINCONCLUSIVE thm3\n");
  CHECK(r.code == kInconclusive);

  r = run_cli({"check", "--loops", "--method", "exact"}, kCounterRecord + "# skip me\n\n" + kWorkedRecord);
  CHECK(r.out == "NOT_GRAPHIC exact j=3\nGRAPHIC exact\n");
  CHECK(r.code == kNotGraphic);
}

TEST_CASE("check: input errors") {
  auto r = run_cli({"check"}, "x\n");
  CHECK(r.code == kInputError);
  CHECK(r.err.find("line 1") != std::string::npos);

  r = run_cli({"check", "--method", "exact"}, "2,1;1,1\n");
  CHECK(r.out == "NOT_GRAPHIC sum_mismatch\n");
  CHECK(r.code == kNotGraphic);

  r = run_cli({"check", "--method", "exact"}, "3,0;2,1\n");
  CHECK(r.out == "NOT_GRAPHIC degree_exceeds_n\n");
  CHECK(r.code == kNotGraphic);

  r = run_cli({"check", "--method", "exact"}, "-1,1;0,0\n");
  CHECK(r.code == kInputError);

  r = run_cli({"check", "--no-loops", "--method", "thm3"}, kWorkedRecord);
  CHECK(r.code == kInputError);

  r = run_cli({"check", "--loops", "--no-loops"}, kWorkedRecord);
  CHECK(r.code == kInputError);

  r = run_cli({"check", "--input", "/nonexistent/file"});
  CHECK(r.code == kInputError);

  r = run_cli({"check", "--method", "bogus"}, kWorkedRecord);
  CHECK(r.code == kInputError);
}

TEST_CASE("check: JSON records") {
  const auto r = run_cli({"check", "--loops", "--method", "exact"}, R"({"in":[2,2,2,0],"out":[4,2,0,0]})" "\n");
  CHECK(r.out == "NOT_GRAPHIC exact j=3\n");
}

TEST_CASE("property: auto with fallback agrees with exact") {
  std::mt19937_64 rng(32);
  std::string corpus;
  std::vector<BidegreeSequence> seqs;
  for (int i = 0; i < 200; ++i) {
    const degree_t n = 1 + static_cast<degree_t>(rng() % 15);
    const degree_t M = static_cast<degree_t>(rng() % static_cast<std::uint64_t>(n + 1));
    const degree_t S = static_cast<degree_t>(rng() % static_cast<std::uint64_t>(n * M + 1));
    seqs.push_back(gen_uniform(n, S, 0, M, rng()));
    corpus += format_record(seqs.back()) + "\n";
  }
  for (bool loops : {true, false}) {
    const std::string flag = loops ? "--loops" : "--no-loops";
    const auto r = run_cli({"check", flag, "--method", "auto", "--fallback-exact"}, corpus);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t i = 0;
    while (std::getline(lines, line)) {
      REQUIRE(i < seqs.size());
      const bool exact = check_exact(seqs[i], loops).graphic();
      CHECK((line.rfind("GRAPHIC", 0) == 0) == exact);
      CHECK((line.rfind("NOT_GRAPHIC", 0) == 0) == !exact);
      ++i;
    }
    CHECK(i == seqs.size());
  }
}

TEST_CASE("bound: text and csv") {
  auto r = run_cli({"bound", "--n", "10", "--m", "1", "--total", "40"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("H2=5 H3=6 H4=5 H5=6 H6=5\n", 0) == 0);

  r = run_cli({"bound", "--n", "10", "--m", "3", "--total", "40"});
  CHECK(r.out.find("H5=10") != std::string::npos);

  r = run_cli({"bound", "--n", "10", "--m", "0", "--total", "40"});
  CHECK(r.out.find("H5=n/a H6=n/a") != std::string::npos);

  r = run_cli({"bound", "--n", "10", "--m", "1", "--total", "40", "--format", "csv"});
  CHECK(r.out == "n,m,total,H2,H3,H4,H5,H6,largest\n10,1,40,5,6,5,6,5,\"H3,H5\"\n");

  r = run_cli({"bound", "--n", "10", "--m", "2", "--total", "5"});
  CHECK(r.code == kInputError);
  r = run_cli({"bound", "--n", "10"});
  CHECK(r.code == kInputError);
}

TEST_CASE("realize: dense, edges, and non-graphic records") {
  auto r = run_cli({"realize", "--no-loops", "--format", "dense"}, "1,1;1,1\n");
  CHECK(r.out == "01\n10\n");
  CHECK(r.code == 0);

  r = run_cli({"realize", "--no-loops", "--format", "edges"}, "1,1;1,1\n");
  CHECK(r.out == "0 1\n1 0\n");

  r = run_cli({"realize", "--loops"}, kCounterRecord);
  CHECK(r.out == "NOT_GRAPHIC j=3\n");
  CHECK(r.code == kNotGraphic);

  r = run_cli({"realize", "--loops"}, "1;1\n" + kCounterRecord);
  CHECK(r.out == "1\n\nNOT_GRAPHIC j=3\n");
}

TEST_CASE("generate: golden records and determinism") {
  auto r = run_cli({"generate", "--kind", "counterexample1", "--Ma", "2", "--Mb", "4"});
  CHECK(r.out == "2,2,2,0;4,2,0,0\n");
  CHECK(r.code == 0);

  r = run_cli({"generate", "--kind", "uniform", "--n", "4", "--total", "4", "--min", "1", "--max", "1"});
  CHECK(r.out == "1,1,1,1;1,1,1,1\n");

  r = run_cli({"generate", "--kind", "counterexample1", "--Ma", "2", "--Mb", "4", "--format", "json"});
  CHECK(r.out == "{\"in\":[2,2,2,0],\"out\":[4,2,0,0]}\n");

  const std::vector<std::string> args{"generate", "--kind", "powerlaw", "--n", "200", "--count", "5", "--seed", "17"};
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  CHECK(first.out == second.out);
  CHECK_FALSE(first.out.empty());

  // record i is the generator called with seed + i
  r = run_cli({"generate", "--kind", "uniform", "--n", "5", "--total", "10", "--min", "1", "--max", "3", "--count",
               "2", "--seed", "4"});
  CHECK(r.out == format_record(gen_uniform(5, 10, 1, 3, 4)) + "\n" + format_record(gen_uniform(5, 10, 1, 3, 5)) + "\n");

  r = run_cli({"generate", "--kind", "powerlaw", "--n", "20", "--exponent", "2"});
  CHECK(r.code == kInputError);
}

TEST_CASE("generate: seed from the environment") {
  ::setenv(kSeedEnv, "5", 1);
  const auto from_env = run_cli({"generate", "--kind", "powerlaw", "--n", "50"});
  ::unsetenv(kSeedEnv);
  const auto explicit_seed = run_cli({"generate", "--kind", "powerlaw", "--n", "50", "--seed", "5"});
  CHECK(from_env.out == explicit_seed.out);
}

TEST_CASE("bench: empty corpus, csv rows, and missing input") {
  auto r = run_cli({"bench", "--corpus", "-"}, "");
  CHECK(r.code == 0);
  CHECK(r.out.find("records: 0") != std::string::npos);

  r = run_cli({"bench", "--kind", "uniform", "--n", "50", "--total", "150", "--min", "1", "--max", "8", "--count",
               "20", "--repeat", "2", "--csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("condition,loops,certified", 0) == 0);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    // the violations column is always zero
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    REQUIRE(cols.size() == 10);
    CHECK(cols[6] == "0");
  }
  CHECK(rows == 10);

  r = run_cli({"bench"});
  CHECK(r.code == kInputError);
}
