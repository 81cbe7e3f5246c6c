#pragma once

// Numerical analysis of the recurrence and denominator polynomials.
//
// lambda1 is the dominant root of x^{k+1} - x^k - 1 and a1 its coefficient
// in the Binet-style expansion a_n ~ a1 * lambda1^n. The weighted series
// denominator
//   A_w(z) = 1 - z - (w^a + w^b) z^{2k+2} - w^{a+b} sum_{j=2k+4}^{4k+3} z^j
// is strictly decreasing on (0, inf), so its unique root e1(w) in (0,1) is
// found by bisection plus Newton polishing. The slope constants of the
// summand-count statistics follow:
//   A = -e1'(1)/e1(1)      (mean per index)
//   C = h'(1),  h(w) = -w e1'(w)/e1(w)   (variance per index)
// with e1'(w) in closed form and h'(1) by Richardson-extrapolated central
// differences. Both are symmetric in (a, b); the evaluation only ever uses
// the symmetric combinations w^a + w^b and w^{a+b}, so the symmetry holds
// bit-for-bit.

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fardiff/bigint.hpp"
#include "fardiff/sequences.hpp"

namespace fardiff {

namespace detail {

// Unique root of a strictly decreasing function on [lo, hi] with
// f(lo) > 0 > f(hi); bisection to ~1e-15, then Newton polish.
template <class F, class DF>
double decreasing_root(F f, DF df, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0) return lo;
  double fhi = f(hi);
  if (fhi == 0) return hi;
  if (flo < 0 || fhi > 0) throw std::logic_error("decreasing_root: bracket does not straddle zero");
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0) lo = mid; else hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double fx = f(x), dfx = df(x);
    if (dfx == 0) break;
    const double next = x - fx / dfx;
    if (!(next > lo && next < hi)) break;
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace detail

// Dominant root of x^{k+1} - x^k - 1 on (1, 2]; absolute accuracy ~1e-14.
inline double largest_root(int k) {
  if (k < 0) throw std::invalid_argument("largest_root: k must be >= 0");
  // f is increasing on [1, 2]; reuse the decreasing solver on -f.
  auto f = [k](double x) { return -(std::pow(x, k + 1) - std::pow(x, k) - 1.0); };
  auto df = [k](double x) { return -((k + 1) * std::pow(x, k) - k * std::pow(x, k - 1)); };
  return detail::decreasing_root(f, df, 1.0, 2.0);
}

// a1 = lim a_n / lambda1^n, estimated until successive values agree to
// 1e-12 (tighter than the 1e-10 contract); throws if not reached by n=500.
inline double binet_coefficient(int k) {
  const double lambda = largest_root(k);
  const auto fam = SequenceFamily::skipponacci(k);
  double prev = 0;
  double power = 1;
  for (int n = 1; n <= 500; ++n) {
    power *= lambda;
    const double est = to_double(fam.term(n)) / power;
    if (n > 1 && std::abs(est - prev) < 1e-12) return est;
    prev = est;
  }
  throw std::runtime_error("binet_coefficient: no convergence within n = 500");
}

namespace detail {

struct WeightedDenominator {
  int k;
  double wa_plus_wb;  // w^a + w^b
  double wab;         // w^{a+b}

  double value(double z) const {
    double v = 1.0 - z - wa_plus_wb * std::pow(z, 2 * k + 2);
    for (int j = 2 * k + 4; j <= 4 * k + 3; ++j) v -= wab * std::pow(z, j);
    return v;
  }
  double derivative(double z) const {
    double v = -1.0 - wa_plus_wb * (2 * k + 2) * std::pow(z, 2 * k + 1);
    for (int j = 2 * k + 4; j <= 4 * k + 3; ++j) v -= wab * j * std::pow(z, j - 1);
    return v;
  }
};

inline WeightedDenominator weighted_denominator(int k, double w, double a, double b) {
  return {k, std::pow(w, a) + std::pow(w, b), std::pow(w, a + b)};
}

}  // namespace detail

// The unique root e1(w) of the weighted denominator in (0, 1).
inline double denominator_root(int k, double w, double a, double b) {
  if (k < 0) throw std::invalid_argument("denominator_root: k must be >= 0");
  if (w <= 0) throw std::invalid_argument("denominator_root: w must be positive");
  const auto poly = detail::weighted_denominator(k, w, a, b);
  return detail::decreasing_root([&](double z) { return poly.value(z); },
                                 [&](double z) { return poly.derivative(z); }, 0.0, 1.0);
}

// Closed-form derivative of the root curve w -> e1(w):
//   e1'(w) = -[(a w^{a-1} + b w^{b-1}) e1^{2k+2}
//              + (a+b) w^{a+b-1} sum_j e1^j]
//            / [1 + (w^a + w^b)(2k+2) e1^{2k+1}
//               + w^{a+b} sum_j j e1^{j-1}],   j in [2k+4, 4k+3].
inline double e1_derivative(int k, double w, double a, double b) {
  const double e1 = denominator_root(k, w, a, b);
  const double coeff_aw = (a == 0 ? 0.0 : a * std::pow(w, a - 1)) +
                          (b == 0 ? 0.0 : b * std::pow(w, b - 1));
  double num = coeff_aw * std::pow(e1, 2 * k + 2);
  double den = 1.0 + (std::pow(w, a) + std::pow(w, b)) * (2 * k + 2) * std::pow(e1, 2 * k + 1);
  for (int j = 2 * k + 4; j <= 4 * k + 3; ++j) {
    num += (a + b) * std::pow(w, a + b - 1) * std::pow(e1, j);
    den += std::pow(w, a + b) * j * std::pow(e1, j - 1);
  }
  return -num / den;
}

struct GrowthConstants {
  int k = 0;
  double a = 0, b = 0;
  double lambda1 = 0;   // dominant recurrence root
  double a1 = 0;        // Binet coefficient of lambda1
  double e1 = 0;        // denominator root in (0,1) at w = 1
  double e1_prime = 0;  // e1'(1)
  double A = 0;         // mean slope of a*K_n + b*L_n
  double C = 0;         // variance slope
};

inline GrowthConstants growth_constants(int k, double a, double b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0))
    throw std::invalid_argument("growth_constants: weights must be non-negative, not both zero");
  GrowthConstants gc;
  gc.k = k;
  gc.a = a;
  gc.b = b;
  gc.lambda1 = largest_root(k);
  gc.a1 = binet_coefficient(k);
  gc.e1 = denominator_root(k, 1.0, a, b);
  gc.e1_prime = e1_derivative(k, 1.0, a, b);
  gc.A = -gc.e1_prime / gc.e1;

  auto h = [&](double w) { return -w * e1_derivative(k, w, a, b) / denominator_root(k, w, a, b); };
  const double step = 1e-5;
  const double d1 = (h(1 + step) - h(1 - step)) / (2 * step);
  const double d2 = (h(1 + step / 2) - h(1 - step / 2)) / step;
  gc.C = (4 * d2 - d1) / 3;  // Richardson: O(step^4) truncation

  if (!(gc.A > 0)) throw std::logic_error("growth_constants: A must be positive");
  if (std::abs(gc.C) < 1e-9)
    throw std::logic_error("growth_constants: |C| below 1e-9 signals a numerical fault");
  return gc;
}

// ---- Denominator polynomial structure --------------------------------------

struct PolynomialReport {
  bool factorization_ok = false;
  int first_mismatch_degree = -1;
  double e1 = 0;
  double min_other_root_magnitude = 0;
  double dominance_margin = 0;  // min_{i>=2} |e_i| - e1
};

namespace detail {

inline std::vector<long long> poly_mul(const std::vector<long long>& p,
                                       const std::vector<long long>& q) {
  std::vector<long long> out(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

}  // namespace detail

// Confirms the exact factorization of the unweighted full denominator
//   1 - 2z + z^2 - 2z^{2k+2} + 2z^{2k+3} - z^{2k+4} + z^{4k+4}
//     = (z^{2k+2} - 1)(z^{k+1} + z - 1)(z^{k+1} - z + 1)
// coefficient by coefficient, and that e1 is strictly dominated in
// magnitude by every other root of the reduced denominator (roots via the
// companion-matrix eigenvalues; only magnitudes are consumed).
inline PolynomialReport verify_denominator_polynomials(int k) {
  if (k < 0) throw std::invalid_argument("verify_denominator_polynomials: k must be >= 0");
  PolynomialReport rep;

  std::vector<long long> expanded(4 * k + 5, 0);
  expanded[0] += 1;
  expanded[1] -= 2;
  expanded[2] += 1;
  expanded[2 * k + 2] -= 2;
  expanded[2 * k + 3] += 2;
  expanded[2 * k + 4] -= 1;
  expanded[4 * k + 4] += 1;

  std::vector<long long> fa(2 * k + 3, 0), fb(k + 2, 0), fc(k + 2, 0);
  fa[0] = -1;
  fa[2 * k + 2] = 1;
  fb[0] = -1;
  fb[1] = 1;
  fb[k + 1] += 1;
  fc[0] = 1;
  fc[1] = -1;
  fc[k + 1] += 1;
  const auto product = detail::poly_mul(detail::poly_mul(fa, fb), fc);

  rep.factorization_ok = product.size() == expanded.size();
  for (std::size_t i = 0; i < std::min(product.size(), expanded.size()); ++i) {
    if (product[i] != expanded[i]) {
      rep.factorization_ok = false;
      rep.first_mismatch_degree = static_cast<int>(i);
      break;
    }
  }

  // Reduced denominator at w = 1: 1 - z - 2z^{2k+2} - sum_{j=2k+4}^{4k+3} z^j.
  std::vector<double> reduced(std::max(4 * k + 4, 2 * k + 3), 0.0);
  reduced[0] = 1;
  reduced[1] = -1;
  reduced[2 * k + 2] = -2;
  for (int j = 2 * k + 4; j <= 4 * k + 3; ++j) reduced[j] = -1;
  while (reduced.back() == 0.0) reduced.pop_back();

  const int degree = static_cast<int>(reduced.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -reduced[i] / reduced[degree];
  const Eigen::VectorXcd roots = companion.eigenvalues();

  rep.e1 = denominator_root(k, 1.0, 1.0, 1.0);
  int nearest = 0;
  double nearest_dist = std::abs(roots[0] - std::complex<double>(rep.e1, 0.0));
  for (int i = 1; i < degree; ++i) {
    const double dist = std::abs(roots[i] - std::complex<double>(rep.e1, 0.0));
    if (dist < nearest_dist) {
      nearest = i;
      nearest_dist = dist;
    }
  }
  double min_other = std::numeric_limits<double>::infinity();
  for (int i = 0; i < degree; ++i)
    if (i != nearest) min_other = std::min(min_other, std::abs(roots[i]));
  rep.min_other_root_magnitude = degree > 1 ? min_other : rep.e1;
  rep.dominance_margin = degree > 1 ? min_other - rep.e1 : 0.0;
  return rep;
}

}  // namespace fardiff
