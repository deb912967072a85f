#include "bidegree/generate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "bidegree/sufficient.hpp"

namespace bidegree {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidParameters, "uniform_below needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

namespace {

std::vector<degree_t> bounded_composition(Rng& rng, degree_t n, degree_t total, degree_t min, degree_t max) {
  std::vector<degree_t> v(static_cast<std::size_t>(n), min);
  std::vector<std::size_t> open;
  if (max > min) {
    open.resize(v.size());
    std::iota(open.begin(), open.end(), std::size_t{0});
  }
  for (degree_t extra = total - n * min; extra > 0; --extra) {
    const auto pos = static_cast<std::size_t>(uniform_below(rng, open.size()));
    const auto slot = open[pos];
    if (++v[slot] == max) {
      open[pos] = open.back();
      open.pop_back();
    }
  }
  return v;
}

}  // namespace

BidegreeSequence gen_uniform(degree_t n, degree_t total, degree_t min, degree_t max, std::uint64_t seed) {
  if (n < 1 || min < 0 || min > max || max > n || total < n * min || total > n * max) {
    throw Error(ErrorCode::Infeasible, "uniform generator needs 0 <= m <= M <= n and n*m <= S <= n*M (n=" +
                                           std::to_string(n) + " S=" + std::to_string(total) +
                                           " m=" + std::to_string(min) + " M=" + std::to_string(max) + ")");
  }
  Rng rng(seed);
  auto a = bounded_composition(rng, n, total, min, max);
  auto b = bounded_composition(rng, n, total, min, max);
  return BidegreeSequence::make(std::move(a), std::move(b));
}

BidegreeSequence gen_powerlaw(degree_t n, double exponent, std::uint64_t seed) {
  if (!(exponent > 2.0) || !std::isfinite(exponent)) {
    throw Error(ErrorCode::BadExponent, "power-law exponent must be finite and > 2");
  }
  if (n < 2) throw Error(ErrorCode::InvalidParameters, "power-law generator needs n >= 2");

  std::vector<double> cdf(static_cast<std::size_t>(n));
  double acc = 0.0;
  for (degree_t x = 1; x <= n; ++x) {
    acc += std::pow(static_cast<double>(x), -exponent);
    cdf[static_cast<std::size_t>(x - 1)] = acc;
  }

  Rng rng(seed);
  const auto draw = [&] {
    const double u = uniform_unit(rng) * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return static_cast<degree_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), n - 1)) + 1;
  };
  std::vector<degree_t> a(static_cast<std::size_t>(n));
  std::vector<degree_t> b(static_cast<std::size_t>(n));
  for (auto& d : a) d = draw();
  for (auto& d : b) d = draw();

  const degree_t sum_a = std::accumulate(a.begin(), a.end(), degree_t{0});
  const degree_t sum_b = std::accumulate(b.begin(), b.end(), degree_t{0});
  auto& low = sum_a < sum_b ? a : b;
  for (degree_t missing = std::abs(sum_a - sum_b); missing > 0;) {
    auto& slot = low[uniform_below(rng, static_cast<std::uint64_t>(n))];
    if (slot < n) {
      ++slot;
      --missing;
    }
  }
  return BidegreeSequence::make(std::move(a), std::move(b));
}

degree_t counterexample1_min_n(degree_t max_in, degree_t max_out) {
  const degree_t in_slots = max_out - 1 + (max_in > 2 ? 1 : 0);
  return std::max({in_slots, max_in, max_out});
}

BidegreeSequence gen_counterexample1(degree_t max_in, degree_t max_out, std::optional<degree_t> n,
                                     std::optional<degree_t> residue_slot) {
  if (max_in < 2 || max_out <= 2) {
    throw Error(ErrorCode::InvalidParameters, "counterexample needs Ma >= 2 and Mb > 2");
  }
  const degree_t size = n.value_or(counterexample1_min_n(max_in, max_out));
  const degree_t slot = residue_slot.value_or(max_out - 1);
  if (size < counterexample1_min_n(max_in, max_out)) {
    throw Error(ErrorCode::InvalidParameters,
                "n=" + std::to_string(size) + " too small, need n >= " +
                    std::to_string(counterexample1_min_n(max_in, max_out)));
  }
  if (slot < max_out - 1 || slot >= size) {
    throw Error(ErrorCode::InvalidParameters, "residue slot must lie in [Mb-1 .. n-1]");
  }

  std::vector<degree_t> a(static_cast<std::size_t>(size), 0);
  std::vector<degree_t> b(static_cast<std::size_t>(size), 0);
  std::fill_n(a.begin(), max_out - 1, max_in);
  a[static_cast<std::size_t>(slot)] += max_in - 2;
  std::fill_n(b.begin(), max_in - 1, max_out);
  b[static_cast<std::size_t>(max_in - 1)] = max_out - 2;
  return BidegreeSequence::make(std::move(a), std::move(b));
}

BidegreeSequence gen_extremal(degree_t n, degree_t total, degree_t max) {
  if (n < 1 || max < 0 || max > n || total < 0 || total > n * max || max * max > total + 1) {
    throw Error(ErrorCode::Infeasible, "extremal generator needs M <= n, S <= n*M and M^2 <= S+1 (n=" +
                                           std::to_string(n) + " S=" + std::to_string(total) +
                                           " M=" + std::to_string(max) + ")");
  }
  auto b = minimizer_b_star(n, total, max, 0);
  auto a = b;
  return BidegreeSequence::make(std::move(a), std::move(b));
}

BidegreeSequence generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::UniformBounded: return gen_uniform(spec.n, spec.total, spec.min, spec.max, spec.seed);
    case GeneratorKind::PowerLaw: return gen_powerlaw(spec.n, spec.exponent, spec.seed);
    case GeneratorKind::Counterexample1:
      return gen_counterexample1(spec.max_in, spec.max_out,
                                 spec.n > 0 ? std::optional<degree_t>(spec.n) : std::nullopt);
    case GeneratorKind::ExtremalMinimizer: return gen_extremal(spec.n, spec.total, spec.max);
  }
  throw Error(ErrorCode::InvalidParameters, "unknown generator kind");
}

}  // namespace bidegree
