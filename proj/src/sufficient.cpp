#include "bidegree/sufficient.hpp"

#include <algorithm>
#include <string>

#include "bidegree/exact.hpp"

namespace bidegree {
namespace {

void require_mean_min_stats(degree_t n, degree_t total, degree_t m, degree_t m_max) {
  if (n < 1 || m < 1 || m > m_max || total < n * m) {
    throw Error(ErrorCode::InvalidStats, "need 1 <= m <= " + std::to_string(m_max) + " and n*m <= S (n=" +
                                             std::to_string(n) + ", m=" + std::to_string(m) +
                                             ", S=" + std::to_string(total) + ")");
  }
}

KStar kstar_from(degree_t offset, degree_t discriminant) {
  if (discriminant < 0) return {1, false};
  return {offset + ceil_isqrt(discriminant), true};
}

// min(floor((S - nm)/k) + m, cap)
degree_t mean_min_bound(degree_t n, degree_t total, degree_t m, degree_t k, degree_t cap) {
  return std::min(floor_div(total - n * m, k) + m, cap);
}

Certificate cert(Condition c, std::vector<std::pair<std::string, degree_t>> params) {
  return Certificate{c, std::move(params)};
}

}  // namespace

KStar kstar_with_loops(degree_t n, degree_t total, degree_t m) {
  require_mean_min_stats(n, total, m, n);
  return kstar_from(m, m * m + total - 2 * m * n);
}

KStar kstar_no_loops(degree_t n, degree_t total, degree_t m) {
  require_mean_min_stats(n, total, m, n - 1);
  return kstar_from(m + 1, (m + 1) * (m + 1) + total - 2 * m * n);
}

CertificateStats certificate_stats(const BidegreeSequence& seq) {
  CertificateStats cs;
  cs.stats = stats(seq);
  const auto a = seq.in_degrees();
  const auto b = seq.out_degrees();
  cs.symmetric = std::equal(a.begin(), a.end(), b.begin());
  cs.top_in_count = std::count(a.begin(), a.end(), cs.stats.max_degree);
  return cs;
}

CheckOutcome check_thm2(const CertificateStats& cs) {
  const auto& s = cs.stats;
  if (!cs.symmetric) return CheckOutcome::inconclusive(Condition::ZZ);
  const degree_t lhs = (s.min_degree + s.max_degree) * (s.min_degree + s.max_degree) / 4;
  const degree_t rhs = s.min_degree * s.n;
  if (lhs > rhs) return CheckOutcome::inconclusive(Condition::ZZ);
  return CheckOutcome::certified(cert(Condition::ZZ, {{"lhs", lhs}, {"mn", rhs}}));
}

CheckOutcome check_thm3(const CertificateStats& cs) {
  const auto& s = cs.stats;
  const degree_t product = s.max_in * s.max_out;
  if (product > s.total + 1) return CheckOutcome::inconclusive(Condition::MaxProductLoops);
  return CheckOutcome::certified(cert(Condition::MaxProductLoops, {{"MaMb", product}, {"bound", s.total + 1}}));
}

CheckOutcome check_thm4(const CertificateStats& cs) {
  const auto& s = cs.stats;
  const degree_t product = (s.max_in + 1) * s.max_out;
  if (product > s.total) return CheckOutcome::inconclusive(Condition::MaxProductNoLoops);
  return CheckOutcome::certified(cert(Condition::MaxProductNoLoops, {{"lhs", product}, {"bound", s.total}}));
}

CheckOutcome check_thm5(const CertificateStats& cs) {
  const auto& s = cs.stats;
  if (s.min_degree < 1) return CheckOutcome::inconclusive(Condition::MeanMinLoops);
  const auto ks = kstar_with_loops(s.n, s.total, s.min_degree);
  const degree_t bound = mean_min_bound(s.n, s.total, s.min_degree, ks.k, s.n);
  if (s.max_degree > bound) return CheckOutcome::inconclusive(Condition::MeanMinLoops);
  return CheckOutcome::certified(cert(Condition::MeanMinLoops, {{"k", ks.k}, {"Mmax", bound}}));
}

CheckOutcome check_thm6(const CertificateStats& cs) {
  const auto& s = cs.stats;
  if (s.min_degree < 1 || s.min_degree > s.n - 1) return CheckOutcome::inconclusive(Condition::MeanMinNoLoops);
  const auto ks = kstar_no_loops(s.n, s.total, s.min_degree);
  const degree_t bound = mean_min_bound(s.n, s.total, s.min_degree, ks.k, s.n - 1);
  if (s.max_degree > bound) return CheckOutcome::inconclusive(Condition::MeanMinNoLoops);
  return CheckOutcome::certified(cert(Condition::MeanMinNoLoops, {{"k", ks.k}, {"Mmax", bound}}));
}

CheckOutcome check_cor2(const CertificateStats& cs) {
  const auto& s = cs.stats;
  const degree_t M = s.max_degree;
  if (M >= s.n) return CheckOutcome::inconclusive(Condition::MultiplicityLoops);
  if (M == 0) return CheckOutcome::certified(cert(Condition::MultiplicityLoops, {{"k", 0}, {"M", 0}}));
  // #(a_i = M) >= M already gives M*k <= S, so the general form subsumes it;
  // the multiplicity is still reported when it is what fires.
  if (M <= cs.top_in_count) {
    return CheckOutcome::certified(cert(Condition::MultiplicityLoops, {{"k", cs.top_in_count}, {"M", M}}));
  }
  const degree_t k = s.total / M;
  if (M > k) return CheckOutcome::inconclusive(Condition::MultiplicityLoops);
  return CheckOutcome::certified(cert(Condition::MultiplicityLoops, {{"k", k}, {"M", M}}));
}

CheckOutcome check_cor3(const CertificateStats& cs) {
  const auto& s = cs.stats;
  const degree_t M = s.max_degree;
  if (M >= s.n) return CheckOutcome::inconclusive(Condition::MultiplicityNoLoops);
  if (M == 0) return CheckOutcome::certified(cert(Condition::MultiplicityNoLoops, {{"k", 1}, {"M", 0}}));
  if (M < cs.top_in_count) {
    return CheckOutcome::certified(cert(Condition::MultiplicityNoLoops, {{"k", cs.top_in_count}, {"M", M}}));
  }
  const degree_t k = s.total / M;
  if (M >= k) return CheckOutcome::inconclusive(Condition::MultiplicityNoLoops);
  return CheckOutcome::certified(cert(Condition::MultiplicityNoLoops, {{"k", k}, {"M", M}}));
}

CheckOutcome check_thm2(const BidegreeSequence& seq) { return check_thm2(certificate_stats(seq)); }
CheckOutcome check_thm3(const BidegreeSequence& seq) { return check_thm3(certificate_stats(seq)); }
CheckOutcome check_thm4(const BidegreeSequence& seq) { return check_thm4(certificate_stats(seq)); }
CheckOutcome check_thm5(const BidegreeSequence& seq) { return check_thm5(certificate_stats(seq)); }
CheckOutcome check_thm6(const BidegreeSequence& seq) { return check_thm6(certificate_stats(seq)); }
CheckOutcome check_cor2(const BidegreeSequence& seq) { return check_cor2(certificate_stats(seq)); }
CheckOutcome check_cor3(const BidegreeSequence& seq) { return check_cor3(certificate_stats(seq)); }

CheckOutcome check_cor5(const BidegreeSequence& seq) {
  const auto s = stats(seq);
  const degree_t n = s.n;
  const degree_t m = s.min_degree;
  const degree_t S = s.total;
  if (m < 1) return CheckOutcome::inconclusive(Condition::HeavyTail);

  const auto order = canonical_order(seq);
  const auto a = seq.in_degrees();
  const auto b = seq.out_degrees();
  const auto len = order.size();

  // tail_max[r] = max over canonical positions >= r of max(a, b)
  std::vector<degree_t> tail_max(len + 1, 0);
  for (std::size_t r = len; r-- > 0;) {
    tail_max[r] = std::max({tail_max[r + 1], a[order[r]], b[order[r]]});
  }

  degree_t in_prefix = 0;   // n * lambda
  degree_t out_prefix = 0;
  for (degree_t R = 0; R < n; ++R) {
    if (R > 0) {
      in_prefix += a[order[static_cast<std::size_t>(R - 1)]];
      out_prefix += b[order[static_cast<std::size_t>(R - 1)]];
    }
    // lambda < m and n - n*lambda/m - R >= 1; both only get worse as R grows
    if (in_prefix >= n * m || m * (n - R - 1) < in_prefix) break;
    if (out_prefix > in_prefix) continue;

    const degree_t M = tail_max[static_cast<std::size_t>(R)];
    const degree_t disc = m * m + S - 2 * m * n + R * m;
    const degree_t k = disc < 0 ? 1 : m + ceil_isqrt(disc);
    const degree_t bound = std::min(floor_div(S - n * m - in_prefix + R * m, k) + m, n);
    if (M > bound) continue;
    if (k <= M || k * m <= m * (n - R) - in_prefix) {
      return CheckOutcome::certified(
          cert(Condition::HeavyTail, {{"R", R}, {"P", in_prefix}, {"k", k}, {"Mmax", bound}}));
    }
  }
  return CheckOutcome::inconclusive(Condition::HeavyTail);
}

namespace {

CheckOutcome check_constant_time(const CertificateStats& cs, Condition c) {
  switch (c) {
    case Condition::ZZ: return check_thm2(cs);
    case Condition::MaxProductLoops: return check_thm3(cs);
    case Condition::MaxProductNoLoops: return check_thm4(cs);
    case Condition::MeanMinLoops: return check_thm5(cs);
    case Condition::MeanMinNoLoops: return check_thm6(cs);
    case Condition::MultiplicityLoops: return check_cor2(cs);
    case Condition::MultiplicityNoLoops: return check_cor3(cs);
    case Condition::HeavyTail: break;
  }
  return CheckOutcome::inconclusive(c);
}

}  // namespace

CheckOutcome check_condition(const BidegreeSequence& seq, Condition c) {
  if (c == Condition::HeavyTail) return check_cor5(seq);
  return check_constant_time(certificate_stats(seq), c);
}

degree_t max_product_no_loops_bound(degree_t total) {
  if (total < 0) throw Error(ErrorCode::InvalidStats, "total must be nonnegative");
  // M(M+1) <= S  <=>  (2M+1)^2 <= 4S+1
  return (isqrt(4 * total + 1) - 1) / 2;
}

std::vector<degree_t> minimizer_b_star(degree_t n, degree_t total, degree_t max, degree_t min) {
  if (n < 1 || min < 0 || min > max || max > n) {
    throw Error(ErrorCode::Infeasible, "need n >= 1 and 0 <= m <= M <= n");
  }
  if (total < n * min || total > n * max) {
    throw Error(ErrorCode::Infeasible, "S=" + std::to_string(total) + " outside [n*m..n*M] = [" +
                                           std::to_string(n * min) + ".." + std::to_string(n * max) + "]");
  }
  std::vector<degree_t> b(static_cast<std::size_t>(n), min);
  if (max == min) return b;
  const degree_t full = std::min((total - n * min) / (max - min), n);
  std::fill_n(b.begin(), full, max);
  if (full < n) b[static_cast<std::size_t>(full)] = total - full * max - (n - full - 1) * min;
  return b;
}

BoundTable bound_table(degree_t n, degree_t m, degree_t total) {
  if (n < 1 || m < 0 || m > n || total < n * m || total > n * n) {
    throw Error(ErrorCode::InvalidStats, "invalid stats n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                             " S=" + std::to_string(total));
  }
  BoundTable t{n, m, total, {}};
  // floor((m+M)^2/4) <= mn  <=>  (m+M)^2 <= 4mn+3
  t.h[0] = std::clamp(isqrt(4 * m * n + 3) - m, degree_t{0}, n);
  t.h[1] = std::min(isqrt(total + 1), n);
  t.h[2] = std::min(max_product_no_loops_bound(total), n);
  if (m >= 1) {
    t.h[3] = mean_min_bound(n, total, m, kstar_with_loops(n, total, m).k, n);
  }
  if (m >= 1 && m <= n - 1) {
    t.h[4] = mean_min_bound(n, total, m, kstar_no_loops(n, total, m).k, n - 1);
  }
  return t;
}

std::vector<Condition> certificate_ladder(bool allow_loops) {
  if (allow_loops) {
    return {Condition::MaxProductLoops, Condition::MultiplicityLoops, Condition::MeanMinLoops,
            Condition::HeavyTail, Condition::ZZ};
  }
  return {Condition::MaxProductNoLoops, Condition::MultiplicityNoLoops, Condition::MeanMinNoLoops};
}

CheckOutcome certify(const BidegreeSequence& seq, bool allow_loops, bool fallback_exact) {
  const auto cs = certificate_stats(seq);
  for (Condition c : certificate_ladder(allow_loops)) {
    auto outcome = c == Condition::HeavyTail ? check_cor5(seq) : check_constant_time(cs, c);
    if (outcome.graphic()) return outcome;
  }
  if (fallback_exact) return check_exact(seq, allow_loops);
  return CheckOutcome{};
}

}  // namespace bidegree
