#include <catch2/catch.hpp>

#include <cmath>
#include <map>

#include "fardiff/decomposer.hpp"
#include "fardiff/summand_stats.hpp"

using namespace fardiff;

namespace {

// Independent oracle: histogram of (positive, negative) counts from the
// decomposer over the interval (R(n-1), R(n)].
std::map<std::pair<int, int>, BigInt> histogram(const SequenceFamily& fam, int n) {
  std::map<std::pair<int, int>, BigInt> h;
  for (BigInt x = fam.r_sum(n - 1) + 1; x <= fam.r_sum(n); ++x) {
    const auto dec = decompose(x, fam);
    int m = 0, l = 0;
    for (const auto& t : dec.terms) (t.sign > 0 ? m : l)++;
    ++h[{m, l}];
  }
  return h;
}

}  // namespace

TEST_CASE("single positive summand count is always one") {
  for (int k : {0, 1, 2}) {
    const auto t = build_count_table(k, 40);
    for (int n = 1; n <= 40; ++n) CHECK(t.at(n, 1, 0) == 1);
  }
}

TEST_CASE("row sums equal interval sizes") {
  for (int k : {0, 1, 2}) {
    const auto t = build_count_table(k, 40);
    const auto fam = SequenceFamily::skipponacci(k);
    for (int n = 1; n <= 40; ++n) CHECK(t.row_sum(n) == fam.r_sum(n) - fam.r_sum(n - 1));
  }
}

TEST_CASE("table equals the enumerated histogram") {
  for (int k : {0, 1, 2}) {
    const auto fam = SequenceFamily::skipponacci(k);
    const auto t = build_count_table(k, 12);
    for (int n = 1; n <= 12; ++n) {
      auto h = histogram(fam, n);
      const int mc = t.max_count(n);
      for (int m = 0; m <= mc; ++m)
        for (int l = 0; l <= mc; ++l) {
          const auto it = h.find({m, l});
          CHECK(t.at(n, m, l) == (it == h.end() ? BigInt(0) : it->second));
        }
    }
  }
}

TEST_CASE("moments at n=1 are a point mass") {
  const auto t = build_count_table(1, 4);
  const auto ms = moments(t, 1, 2.5, 1.0);
  CHECK(ms.mean == 2.5);
  CHECK(ms.variance == 0.0);
  CHECK(ms.degenerate);
  CHECK(std::isnan(ms.skewness));
}

TEST_CASE("moment weights must be admissible") {
  const auto t = build_count_table(1, 4);
  CHECK_THROWS_AS(moments(t, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(moments(t, 9, 1, 0), std::out_of_range);
}

TEST_CASE("generating function identity on truncated series") {
  CHECK(verify_generating_function(1, 28).ok);
  CHECK(verify_generating_function(0, 20).ok);
  CHECK(verify_generating_function(2, 28).ok);
}

TEST_CASE("generating function check is sensitive to any single entry") {
  auto t = build_count_table(1, 24);
  t.at_mut(5, 1, 1) += 1;
  const auto r = verify_generating_function(t);
  CHECK_FALSE(r.ok);
  CHECK(r.n >= 1);
}

TEST_CASE("mean slope approaches one tenth for the Fibonacci family") {
  const auto t = build_count_table(1, 120);
  const double diff = moments(t, 120, 1, 0).mean - moments(t, 119, 1, 0).mean;
  CHECK(diff == Approx(0.1).margin(1e-3));
}

TEST_CASE("positive summands outnumber negative ones by half the golden ratio") {
  const auto t = build_count_table(1, 120);
  const double diff = moments(t, 120, 1, 0).mean - moments(t, 120, 0, 1).mean;
  CHECK(diff == Approx((1.0 + std::sqrt(5.0)) / 4.0).margin(1e-3));
}

TEST_CASE("correlation stays within [-1, 1]") {
  const auto t = build_count_table(1, 60);
  for (int n = 8; n <= 60; ++n) {
    const auto ms = moments(t, n, 1, 1);
    CHECK(std::abs(ms.corr_kl) <= 1.0);
  }
}

TEST_CASE("diagnostics: fitted slopes and the weight identity") {
  const auto t = build_count_table(1, 80);
  std::vector<int> ns;
  for (int n = 20; n <= 80; n += 2) ns.push_back(n);
  const auto d10 = gaussian_diagnostics(t, 1, 0, ns);
  const auto d11 = gaussian_diagnostics(t, 1, 1, ns);
  CHECK(d10.mean_fit.slope == Approx(0.1).margin(5e-3));
  // variance slope, frozen from the exact table and the spectral route
  CHECK(d10.variance_fit.slope == Approx(0.0398459713).margin(5e-3));
  CHECK(d11.mean_fit.slope == Approx(2 * d10.mean_fit.slope).margin(1e-3));
  // Corr[K+L, K-L] drifts toward zero
  CHECK(std::abs(d10.corr_sum_diff.back()) < std::abs(d10.corr_sum_diff.front()));
  CHECK(d10.per_n.back().corr_kl ==
        Approx((10.0 * std::sqrt(5.0) - 121.0) / 179.0).margin(0.01));
}

TEST_CASE("standardized shape flattens as n grows") {
  const auto t = build_count_table(1, 100);
  const auto early = moments(t, 40, 1, 1);
  const auto late = moments(t, 100, 1, 1);
  CHECK(std::abs(late.skewness) < std::abs(early.skewness));
  CHECK(std::abs(late.excess_kurtosis) < std::abs(early.excess_kurtosis));
}
