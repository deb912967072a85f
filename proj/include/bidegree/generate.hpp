#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "bidegree/core.hpp"

namespace bidegree {

/// All generators draw from std::mt19937_64 (its output sequence is fixed by
/// the C++ standard) and map raw 64-bit words to ranges with the helpers
/// below rather than std:: distributions, whose algorithms are
/// implementation-defined. Same seed, same bytes, on every platform.
using Rng = std::mt19937_64;

/// Unbiased integer in [0, bound) by rejection.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
/// Uniform double in [0, 1) from the top 53 bits.
double uniform_unit(Rng& rng);

/// a and b each start at m everywhere; S - nm unit increments then go to
/// uniformly chosen slots still below M.
BidegreeSequence gen_uniform(degree_t n, degree_t total, degree_t min, degree_t max, std::uint64_t seed);

/// Degrees i.i.d. with P(d = x) proportional to x^-exponent on [1..n]; the
/// vector with the smaller sum is topped up one unit at a time at random
/// slots below n until the sums agree.
BidegreeSequence gen_powerlaw(degree_t n, double exponent, std::uint64_t seed);

/// Smallest n that holds the counterexample for (Ma, Mb).
degree_t counterexample1_min_n(degree_t max_in, degree_t max_out);

/// Not graphic with loops although Ma*Mb = S + 2:
///   b = (Mb x (Ma-1), Mb-2, 0, ...),  a = (Ma x (Mb-1), 0, ...)
/// with the leftover in-degree Ma-2 placed at `residue_slot` (default Mb-1,
/// any slot >= Mb-1 works).
BidegreeSequence gen_counterexample1(degree_t max_in, degree_t max_out, std::optional<degree_t> n = std::nullopt,
                                     std::optional<degree_t> residue_slot = std::nullopt);

/// a = b = the F-minimizing vector (M, ..., M, r, 0, ...); requires M^2 <= S+1
/// so the max-product bound holds with equality or one to spare.
BidegreeSequence gen_extremal(degree_t n, degree_t total, degree_t max);

enum class GeneratorKind { UniformBounded, PowerLaw, Counterexample1, ExtremalMinimizer };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::UniformBounded;
  degree_t n = 0;
  std::uint64_t seed = 0;
  degree_t total = 0;       // uniform, extremal
  degree_t min = 0;         // uniform
  degree_t max = 0;         // uniform, extremal
  double exponent = 2.5;    // powerlaw
  degree_t max_in = 0;      // counterexample1
  degree_t max_out = 0;     // counterexample1
};

BidegreeSequence generate(const GeneratorSpec& spec);

}  // namespace bidegree
