#pragma once

// Exact joint distribution of summand counts.
//
// p(n, m, l) counts the integers in (R(n-1), R(n)] whose decomposition has
// m positive and l negative summands. With the seed p(1,1,0) = 1 the table
// follows
//   p(n,m,l) = p(n-1,m,l) + p(n-2k-2,m-1,l) + p(n-k-2,l,m-1)
// (note the swapped count pair in the last term: subtracting the leading
// term turns the negative remainder's positives into negatives).
//
// Counts per axis are bounded by ceil(n/(k+2)) since adjacent indices are
// at least k+2 apart, which keeps the dense table feasible to n ~ 300.
// Moments are accumulated in exact integer/rational arithmetic and only
// the final summary is floating point.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fardiff/bigint.hpp"

namespace fardiff {

class CountTable {
 public:
  CountTable(int k, int n_max) : k_(k), n_max_(n_max) {
    if (k < 0) throw std::invalid_argument("CountTable: k must be >= 0");
    if (n_max < 1) throw std::invalid_argument("CountTable: n_max must be >= 1");
    rows_.resize(n_max);
    for (int n = 1; n <= n_max; ++n)
      rows_[n - 1].assign(static_cast<std::size_t>(side(n)) * side(n), BigInt(0));
  }

  int k() const { return k_; }
  int n_max() const { return n_max_; }

  // Largest possible positive (or negative) count in row n.
  int max_count(int n) const { return (n + k_ + 1) / (k_ + 2); }

  const BigInt& at(int n, int m, int l) const {
    if (n < 1 || m < 0 || l < 0) return zero_;
    if (n > n_max_) throw std::out_of_range("CountTable::at: n beyond table");
    if (m > max_count(n) || l > max_count(n)) return zero_;
    return rows_[n - 1][static_cast<std::size_t>(m) * side(n) + l];
  }

  BigInt& at_mut(int n, int m, int l) {
    if (n < 1 || n > n_max_ || m < 0 || l < 0 || m > max_count(n) || l > max_count(n))
      throw std::out_of_range("CountTable::at_mut: index outside stored range");
    return rows_[n - 1][static_cast<std::size_t>(m) * side(n) + l];
  }

  // Equals R(n) - R(n-1), the size of the n-th interval.
  BigInt row_sum(int n) const {
    BigInt total = 0;
    const int mc = max_count(n);
    for (int m = 0; m <= mc; ++m)
      for (int l = 0; l <= mc; ++l) total += at(n, m, l);
    return total;
  }

  // Total number of gaps over the n-th interval: sum of (m + l - 1).
  BigInt total_gap_count(int n) const {
    BigInt total = 0;
    const int mc = max_count(n);
    for (int m = 0; m <= mc; ++m)
      for (int l = 0; l <= mc; ++l) {
        const BigInt& p = at(n, m, l);
        if (p != 0) total += p * (m + l - 1);
      }
    return total;
  }

 private:
  int side(int n) const { return max_count(n) + 1; }

  int k_;
  int n_max_;
  std::vector<std::vector<BigInt>> rows_;
  inline static const BigInt zero_{0};
};

inline CountTable build_count_table(int k, int n_max) {
  CountTable t(k, n_max);
  t.at_mut(1, 1, 0) = 1;
  for (int n = 2; n <= n_max; ++n) {
    const int mc = t.max_count(n);
    for (int m = 0; m <= mc; ++m)
      for (int l = 0; l <= mc; ++l) {
        BigInt v = t.at(n - 1, m, l);
        v += t.at(n - (2 * k + 2), m - 1, l);
        v += t.at(n - (k + 2), l, m - 1);
        if (v != 0) t.at_mut(n, m, l) = std::move(v);
      }
  }
  return t;
}

struct MomentSummary {
  int n = 0;
  double a = 0, b = 0;
  double mean = 0;
  double variance = 0;
  double skewness = std::numeric_limits<double>::quiet_NaN();
  double excess_kurtosis = std::numeric_limits<double>::quiet_NaN();
  double corr_kl = std::numeric_limits<double>::quiet_NaN();
  bool degenerate = false;  // variance 0: skewness/kurtosis undefined
};

namespace detail {

struct RowAccumulator {
  BigInt weight;                       // sum of p
  Rational t1, t2, t3, t4;             // raw moments of a*m + b*l, times weight
  BigInt sm, sl, smm, sll, sml;        // raw integer moments of (m, l)
};

inline RowAccumulator accumulate_row(const CountTable& t, int n, const Rational& a,
                                     const Rational& b) {
  RowAccumulator acc;
  const int mc = t.max_count(n);
  for (int m = 0; m <= mc; ++m)
    for (int l = 0; l <= mc; ++l) {
      const BigInt& w = t.at(n, m, l);
      if (w == 0) continue;
      acc.weight += w;
      acc.sm += w * m;
      acc.sl += w * l;
      acc.smm += w * m * m;
      acc.sll += w * l * l;
      acc.sml += w * m * l;
      Rational tval = a * m + b * l;
      Rational wt = Rational(w) * tval;
      acc.t1 += wt;
      wt *= tval;
      acc.t2 += wt;
      wt *= tval;
      acc.t3 += wt;
      wt *= tval;
      acc.t4 += wt;
    }
  return acc;
}

}  // namespace detail

inline MomentSummary moments(const CountTable& table, int n, double a, double b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0))
    throw std::invalid_argument("moments: weights must be non-negative and not both zero");
  if (n < 1 || n > table.n_max()) throw std::out_of_range("moments: n beyond table");

  const Rational aq(a), bq(b);  // exact binary fractions
  const auto acc = detail::accumulate_row(table, n, aq, bq);
  if (acc.weight == 0) throw std::logic_error("moments: empty row");

  MomentSummary out;
  out.n = n;
  out.a = a;
  out.b = b;

  const Rational w(acc.weight);
  const Rational e1 = acc.t1 / w;
  const Rational e2 = acc.t2 / w;
  const Rational e3 = acc.t3 / w;
  const Rational e4 = acc.t4 / w;
  const Rational var = e2 - e1 * e1;
  out.mean = to_double(e1);
  out.variance = to_double(var);
  if (var == 0) {
    out.degenerate = true;
  } else {
    const Rational mu3 = e3 - 3 * e2 * e1 + 2 * e1 * e1 * e1;
    const Rational mu4 = e4 - 4 * e3 * e1 + 6 * e2 * e1 * e1 - 3 * e1 * e1 * e1 * e1;
    out.skewness = to_double(mu3) / std::pow(to_double(var), 1.5);
    out.excess_kurtosis = to_double(mu4 / (var * var)) - 3.0;
  }

  const Rational em = Rational(acc.sm) / w, el = Rational(acc.sl) / w;
  const Rational vm = Rational(acc.smm) / w - em * em;
  const Rational vl = Rational(acc.sll) / w - el * el;
  if (vm != 0 && vl != 0) {
    const Rational cov = Rational(acc.sml) / w - em * el;
    out.corr_kl = to_double(cov) / std::sqrt(to_double(vm) * to_double(vl));
  }
  return out;
}

// ---- Generating-function verification -------------------------------------
//
// Checks, in exact integer arithmetic through degree n_max in z, that the
// table's trivariate series F = sum p(n,m,l) x^m y^l z^n satisfies
//   D(x,y,z) * F = N(x,y,z)
// for both equivalent presentations of the rational form:
//   D1 = 1 - 2z + z^2 - (x+y)(z^{2k+2} - z^{2k+3}) - xy(z^{2k+4} - z^{4k+4})
//   N1 = xz - xz^2 + xy z^{k+3} - xy z^{2k+3}
// and, after removing the common factor (1 - z),
//   D2 = 1 - z - (x+y)z^{2k+2} - xy sum_{j=2k+4}^{4k+3} z^j
//   N2 = xz + xy sum_{j=k+3}^{2k+2} z^j.

struct GfMonomial {
  long coeff;
  int dm, dl, dn;  // exponents of x, y, z
};

struct GfCheckResult {
  bool ok = true;
  int n = -1, m = -1, l = -1;  // first offending coefficient when !ok
  explicit operator bool() const { return ok; }
};

namespace detail {

inline GfCheckResult check_gf_product(const CountTable& t,
                                      const std::vector<GfMonomial>& denom,
                                      const std::vector<GfMonomial>& numer) {
  for (int n = 1; n <= t.n_max(); ++n) {
    const int mc = t.max_count(n) + 1;
    for (int m = 0; m <= mc; ++m)
      for (int l = 0; l <= mc; ++l) {
        BigInt got = 0;
        for (const auto& mono : denom) {
          if (n - mono.dn < 1) continue;
          const BigInt& p = t.at(n - mono.dn, m - mono.dm, l - mono.dl);
          if (p != 0) got += mono.coeff * p;
        }
        BigInt want = 0;
        for (const auto& mono : numer)
          if (mono.dn == n && mono.dm == m && mono.dl == l) want += mono.coeff;
        if (got != want) return {false, n, m, l};
      }
  }
  return {};
}

}  // namespace detail

inline GfCheckResult verify_generating_function(const CountTable& t) {
  const int k = t.k();
  const std::vector<GfMonomial> d1 = {
      {+1, 0, 0, 0},          {-2, 0, 0, 1},          {+1, 0, 0, 2},
      {-1, 1, 0, 2 * k + 2},  {-1, 0, 1, 2 * k + 2},  {+1, 1, 0, 2 * k + 3},
      {+1, 0, 1, 2 * k + 3},  {-1, 1, 1, 2 * k + 4},  {+1, 1, 1, 4 * k + 4}};
  const std::vector<GfMonomial> n1 = {
      {+1, 1, 0, 1}, {-1, 1, 0, 2}, {+1, 1, 1, k + 3}, {-1, 1, 1, 2 * k + 3}};
  if (auto r = detail::check_gf_product(t, d1, n1); !r) return r;

  std::vector<GfMonomial> d2 = {
      {+1, 0, 0, 0}, {-1, 0, 0, 1}, {-1, 1, 0, 2 * k + 2}, {-1, 0, 1, 2 * k + 2}};
  for (int j = 2 * k + 4; j <= 4 * k + 3; ++j) d2.push_back({-1, 1, 1, j});
  std::vector<GfMonomial> n2 = {{+1, 1, 0, 1}};
  for (int j = k + 3; j <= 2 * k + 2; ++j) n2.push_back({+1, 1, 1, j});
  return detail::check_gf_product(t, d2, n2);
}

inline GfCheckResult verify_generating_function(int k, int n_max) {
  if (n_max < 4 * k + 4) throw std::invalid_argument("verify_generating_function: need n_max >= 4k+4");
  return verify_generating_function(build_count_table(k, n_max));
}

// ---- Gaussian-convergence diagnostics --------------------------------------

struct LinearFit {
  double slope = 0;
  double intercept = 0;
};

struct DiagnosticsReport {
  std::vector<MomentSummary> per_n;
  std::vector<double> corr_sum_diff;  // Corr[K+L, K-L] per entry of per_n
  LinearFit mean_fit;                 // least squares over the top half of n_list
  LinearFit variance_fit;
};

namespace detail {

inline LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) return {};
  return {(n * sxy - sx * sy) / denom, (sy * sxx - sx * sxy) / denom};
}

}  // namespace detail

inline DiagnosticsReport gaussian_diagnostics(const CountTable& table, double a, double b,
                                              const std::vector<int>& n_list) {
  DiagnosticsReport rep;
  std::vector<double> ns, means, vars;
  for (int n : n_list) {
    rep.per_n.push_back(moments(table, n, a, b));
    const auto acc = detail::accumulate_row(table, n, Rational(1), Rational(0));
    const Rational w(acc.weight);
    const Rational em = Rational(acc.sm) / w, el = Rational(acc.sl) / w;
    const Rational vm = Rational(acc.smm) / w - em * em;
    const Rational vl = Rational(acc.sll) / w - el * el;
    const Rational cov = Rational(acc.sml) / w - em * el;
    const Rational vsum = vm + vl + 2 * cov;   // Var[K+L]
    const Rational vdiff = vm + vl - 2 * cov;  // Var[K-L]
    if (vsum != 0 && vdiff != 0)
      rep.corr_sum_diff.push_back(to_double(vm - vl) /
                                  std::sqrt(to_double(vsum) * to_double(vdiff)));
    else
      rep.corr_sum_diff.push_back(std::numeric_limits<double>::quiet_NaN());
    ns.push_back(n);
    means.push_back(rep.per_n.back().mean);
    vars.push_back(rep.per_n.back().variance);
  }
  // Asymptotically linear; fitting the upper half suppresses the o(1) tail.
  const std::size_t half = ns.size() / 2;
  std::vector<double> xs(ns.begin() + half, ns.end());
  rep.mean_fit = detail::least_squares(xs, {means.begin() + half, means.end()});
  rep.variance_fit = detail::least_squares(xs, {vars.begin() + half, vars.end()});
  return rep;
}

}  // namespace fardiff
