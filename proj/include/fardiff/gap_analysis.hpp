#pragma once

// Distribution of index gaps between adjacent summands, for integers in
// (R(n-1), R(n)] of a Skipponacci family.
//
// Three routes:
//   * empirical_gaps    - decompose every integer in the interval and tally
//                         adjacent index differences (the run-in below the
//                         smallest summand is not a gap);
//   * counting_gaps     - exact combinatorial counts. A decomposition with
//                         adjacent summands at i and i+j splits into an
//                         upper part (leading +a_n, smallest term at i+j)
//                         and a lower part (leading term at i). With
//                         c(i) = R(i) - R(i-1), shifting indices and
//                         inclusion-exclusion give the upper-part count
//                         c(n-i-j+1) - c(n-i-j) summed over both smallest-
//                         term signs, and the lower part contributes c(i)
//                         per admissible sign, so
//                           X(i, i+j) = c(i) * [c(n-i-j+1) - c(n-i-j)]
//                         for k+2 <= j < 2k+2 (opposite signs only) and
//                         twice that for j >= 2k+2 (all four sign pairs);
//   * theoretical_gaps  - the n -> infinity limit: geometric decay with
//                         ratio 1/lambda1 and a branch prefactor that is
//                         halved on the opposite-sign-only range.
//
// The two finite-n routes agree integer-for-integer; both normalize by the
// exact total gap count Y(n) = sum p(n,m,l) * (m+l-1).

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fardiff/bigint.hpp"
#include "fardiff/decomposer.hpp"
#include "fardiff/sequences.hpp"
#include "fardiff/spectral.hpp"
#include "fardiff/summand_stats.hpp"

namespace fardiff {

enum class GapKind { empirical, counting, theoretical };

struct GapDistribution {
  int k = 0;
  int n = -1;  // -1 for the limiting distribution
  GapKind kind = GapKind::empirical;
  std::map<int, double> probs;
  std::map<int, BigInt> numerators;  // exact gap counts (empirical/counting)
  BigInt total_gaps = 0;             // Y(n); zero for the theoretical kind
};

inline std::vector<int> gaps_of(const SignedDecomposition& dec) {
  std::vector<int> out;
  for (std::size_t i = 1; i < dec.terms.size(); ++i)
    out.push_back(dec.terms[i - 1].index - dec.terms[i].index);
  return out;
}

inline GapDistribution empirical_gaps(int k, int n, int threads = 1) {
  if (n < 1) throw std::invalid_argument("empirical_gaps: n must be >= 1");
  if (threads < 1) threads = 1;
  const auto family = SequenceFamily::skipponacci(k);
  const BigInt lo = family.r_sum(n - 1);
  const BigInt hi = family.r_sum(n);
  const BigInt size = hi - lo;
  if (size > 10'000'000)
    throw std::invalid_argument("empirical_gaps: interval size " + size.get_str() +
                                " too large to enumerate; use counting_gaps instead");

  const std::int64_t count = size.get_si();
  threads = static_cast<int>(std::min<std::int64_t>(threads, count > 0 ? count : 1));
  std::vector<std::map<int, std::int64_t>> tallies(threads);
  std::vector<std::int64_t> gap_totals(threads, 0);

  auto worker = [&](int w) {
    const std::int64_t begin = count * w / threads, end = count * (w + 1) / threads;
    BigInt x = lo + 1 + begin;
    auto& tally = tallies[w];
    for (std::int64_t i = begin; i < end; ++i, ++x) {
      const auto dec = decompose(x, family);
      for (std::size_t t = 1; t < dec.terms.size(); ++t)
        ++tally[dec.terms[t - 1].index - dec.terms[t].index];
      gap_totals[w] += static_cast<std::int64_t>(dec.terms.size()) - 1;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    // Published before the workers start reading; the interval search may
    // gallop past n, so cover that range too.
    family.r_sum(2 * n + 2);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  GapDistribution out;
  out.k = k;
  out.n = n;
  out.kind = GapKind::empirical;
  for (int w = 0; w < threads; ++w) {
    for (const auto& [j, c] : tallies[w]) out.numerators[j] += c;
    out.total_gaps += gap_totals[w];
  }
  if (out.total_gaps > 0)
    for (const auto& [j, c] : out.numerators)
      out.probs[j] = to_double(Rational(c) / Rational(out.total_gaps));
  return out;
}

inline GapDistribution counting_gaps(int k, int n, const CountTable* table = nullptr) {
  if (n < 1) throw std::invalid_argument("counting_gaps: n must be >= 1");
  std::optional<CountTable> local;
  if (!table) local.emplace(build_count_table(k, n));
  const CountTable& t = table ? *table : *local;
  if (t.k() != k || t.n_max() < n)
    throw std::invalid_argument("counting_gaps: table does not cover (k, n)");

  const auto family = SequenceFamily::skipponacci(k);
  auto c = [&](int i) -> BigInt {
    return i < 1 ? BigInt(0) : BigInt(family.r_sum(i) - family.r_sum(i - 1));
  };

  GapDistribution out;
  out.k = k;
  out.n = n;
  out.kind = GapKind::counting;
  out.total_gaps = t.total_gap_count(n);
  for (int j = k + 2; j <= n - 1; ++j) {
    BigInt xj = 0;
    for (int i = 1; i <= n - j; ++i) xj += c(i) * (c(n - i - j + 1) - c(n - i - j));
    if (j >= 2 * k + 2) xj *= 2;
    if (xj != 0) out.numerators[j] = std::move(xj);
  }
  if (out.total_gaps > 0)
    for (const auto& [j, x] : out.numerators)
      out.probs[j] = to_double(Rational(x) / Rational(out.total_gaps));
  return out;
}

// Limiting distribution. With c2 = 2 a1 (lambda1 - 1)^2 /
// (A_{1,1} lambda1 (1 - lambda1^{-2k-2})):
//   P(j) = 0                     for j <= k+1
//   P(j) = (c2/2) lambda1^{-j}   for k+2 <= j < 2k+2
//   P(j) = c2 lambda1^{-j}       for j >= 2k+2.
// At k = 1 this reproduces the classical Fibonacci values
// P(3) = 5 a1 / (phi^2 (phi^4 - 1)) and P(j) = (10 a1 phi/(phi^4-1)) phi^{-j},
// and the whole distribution sums to 1.
inline GapDistribution theoretical_gaps(int k, int j_max = -1) {
  if (j_max < 0) j_max = 4 * k + 40;
  const auto gc = growth_constants(k, 1.0, 1.0);
  const double lambda = gc.lambda1;
  const double c2 = 2.0 * gc.a1 * (lambda - 1) * (lambda - 1) /
                    (gc.A * lambda * (1.0 - std::pow(lambda, -(2 * k + 2))));
  GapDistribution out;
  out.k = k;
  out.n = -1;
  out.kind = GapKind::theoretical;
  for (int j = 0; j <= j_max; ++j) {
    if (j <= k + 1) out.probs[j] = 0.0;
    else if (j < 2 * k + 2) out.probs[j] = 0.5 * c2 * std::pow(lambda, -j);
    else out.probs[j] = c2 * std::pow(lambda, -j);
  }
  return out;
}

}  // namespace fardiff
