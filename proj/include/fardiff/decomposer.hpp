#pragma once

// Far-difference decompositions: every integer is a unique signed sum of
// family terms in which same-sign summands are at least s apart in index
// and opposite-sign summands at least d apart.
//
// decompose() walks the interval partition: the unique n with
// R(n-1) < |x| <= R(n) gives the leading term; subtracting it leaves a
// remainder bounded by R(n-s), and flipping sign on a_n - |x| leaves one
// bounded by R(n-d), so legality is automatic whenever the interval
// identity a_n = R(n-1) + R(n-d) + 1 holds at every visited index.
// brute_force_decompositions() is the independent uniqueness oracle.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fardiff/bigint.hpp"
#include "fardiff/sequences.hpp"

namespace fardiff {

struct SignedTerm {
  int index = 0;
  int sign = 0;  // +1 or -1
  friend bool operator==(const SignedTerm& a, const SignedTerm& b) {
    return a.index == b.index && a.sign == b.sign;
  }
};

// Terms sorted by strictly decreasing index; the empty list encodes 0.
struct SignedDecomposition {
  std::vector<SignedTerm> terms;
  SequenceFamily family;

  friend bool operator==(const SignedDecomposition& a, const SignedDecomposition& b) {
    return a.terms == b.terms && a.family == b.family;
  }
};

// Raised when the interval identity fails at an index visited by
// decompose(); only possible for explicit families that do not follow
// the interval structure.
class DecompositionFailure : public std::runtime_error {
 public:
  explicit DecompositionFailure(int index, const std::string& family_name)
      : std::runtime_error("interval identity a_n = R(n-1) + R(n-d) + 1 fails at n=" +
                           std::to_string(index) + " for " + family_name),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

inline SignedDecomposition decompose(const BigInt& x, const SequenceFamily& family) {
  SignedDecomposition dec{{}, family};
  if (x == 0) return dec;
  const int overall = sgn(x);
  BigInt r = abs(x);
  int sign = 1;
  while (r != 0) {
    const int n = family.interval_index(r);
    if (!family.check_interval_identity(n)) throw DecompositionFailure(n, family.name());
    dec.terms.push_back({n, overall * sign});
    BigInt a = family.term(n);
    if (r >= a) {
      r -= a;        // next leading index <= n - s
    } else {
      r = a - r;     // next leading index <= n - d, sign flips
      sign = -sign;
    }
  }
  return dec;
}

// Sum of the signed terms; does not require legality.
inline BigInt evaluate(const SignedDecomposition& dec) {
  BigInt total = 0;
  for (const auto& t : dec.terms) {
    if (t.sign > 0) total += dec.family.term(t.index);
    else total -= dec.family.term(t.index);
  }
  return total;
}

inline bool is_legal(const SignedDecomposition& dec, int s, int d) {
  const auto& ts = dec.terms;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].sign != 1 && ts[i].sign != -1)
      throw std::invalid_argument("is_legal: signs must be +1 or -1");
    if (ts[i].index < 1) throw std::invalid_argument("is_legal: indices must be >= 1");
    if (i > 0 && ts[i - 1].index <= ts[i].index)
      throw std::invalid_argument("is_legal: indices must be strictly decreasing");
  }
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const int gap = ts[i - 1].index - ts[i].index;
    if (gap < (ts[i - 1].sign == ts[i].sign ? s : d)) return false;
  }
  return true;
}

inline bool is_legal(const SignedDecomposition& dec) {
  return is_legal(dec, dec.family.s(), dec.family.d());
}

namespace detail {

template <class Visitor>
void enumerate_legal(const SequenceFamily& family, int cap_pos, int cap_neg, BigInt& sum,
                     std::vector<SignedTerm>& prefix, Visitor& visit) {
  visit(sum, prefix);
  for (int i = std::max(cap_pos, cap_neg); i >= 1; --i) {
    const BigInt a = family.term(i);
    if (i <= cap_pos) {
      prefix.push_back({i, +1});
      sum += a;
      enumerate_legal(family, i - family.s(), i - family.d(), sum, prefix, visit);
      sum -= a;
      prefix.pop_back();
    }
    if (i <= cap_neg) {
      prefix.push_back({i, -1});
      sum -= a;
      enumerate_legal(family, i - family.d(), i - family.s(), sum, prefix, visit);
      sum += a;
      prefix.pop_back();
    }
  }
}

inline void brute_force_search(const BigInt& x, const SequenceFamily& family,
                               int cap_pos, int cap_neg, BigInt& sum,
                               std::vector<SignedTerm>& prefix,
                               std::vector<SignedDecomposition>& out) {
  if (sum == x) out.push_back({prefix, family});
  // Largest reachable continuation is +R(cap_pos), smallest -R(cap_neg).
  if (x > sum + family.r_sum(cap_pos) || x < sum - family.r_sum(cap_neg)) return;
  for (int i = std::max(cap_pos, cap_neg); i >= 1; --i) {
    const BigInt a = family.term(i);
    if (i <= cap_pos) {
      prefix.push_back({i, +1});
      sum += a;
      brute_force_search(x, family, i - family.s(), i - family.d(), sum, prefix, out);
      sum -= a;
      prefix.pop_back();
    }
    if (i <= cap_neg) {
      prefix.push_back({i, -1});
      sum -= a;
      brute_force_search(x, family, i - family.d(), i - family.s(), sum, prefix, out);
      sum += a;
      prefix.pop_back();
    }
  }
}

}  // namespace detail

// Exhaustively enumerates every legal sign assignment over indices
// 1..index_bound and returns the decompositions that evaluate to x.
// Depth-first from the top index, pruning prefixes whose reachable
// range [sum - R(cap_neg), sum + R(cap_pos)] cannot bridge to x.
// Intended for small bounds (<= 30 or so).
inline std::vector<SignedDecomposition> brute_force_decompositions(
    const BigInt& x, const SequenceFamily& family, int index_bound) {
  if (index_bound < 1) throw std::invalid_argument("brute_force_decompositions: bound must be >= 1");
  index_bound = std::min(index_bound, family.max_index());
  std::vector<SignedDecomposition> out;
  std::vector<SignedTerm> prefix;
  BigInt sum = 0;
  detail::brute_force_search(x, family, index_bound, index_bound, sum, prefix, out);
  return out;
}

// Visits every legal decomposition over indices 1..index_bound exactly once
// (the empty one included), as (value, terms sorted by decreasing index).
template <class Visitor>
void for_each_legal_decomposition(const SequenceFamily& family, int index_bound, Visitor&& visit) {
  if (index_bound < 1) throw std::invalid_argument("for_each_legal_decomposition: bound must be >= 1");
  index_bound = std::min(index_bound, family.max_index());
  std::vector<SignedTerm> prefix;
  BigInt sum = 0;
  detail::enumerate_legal(family, index_bound, index_bound, sum, prefix, visit);
}

}  // namespace fardiff
