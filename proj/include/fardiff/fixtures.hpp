#pragma once

// Bundled (1,1) families over powers of three, plus the rewriting that
// maps representations between the plain base and the variant with one
// doubled term.
//
// The plain base is a_i = 3^{i-1}; signed sums over it with distinct
// indices are unique. The variants keep uniqueness without following the
// standard construction: either the first terms are replaced (the
// "example5.1*" fixtures) or a single term is doubled (b_k:<k>, where
// term k+1 becomes 2*3^k).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fardiff/bigint.hpp"
#include "fardiff/decomposer.hpp"
#include "fardiff/sequences.hpp"

namespace fardiff {

inline SequenceFamily base3_standard_family() { return SequenceFamily::standard_sd(1, 1); }

namespace detail {

inline std::vector<BigInt> powers_of_three(int n_terms) {
  std::vector<BigInt> out(n_terms);
  BigInt p = 1;
  for (int i = 0; i < n_terms; ++i, p *= 3) out[i] = p;
  return out;
}

}  // namespace detail

// Powers of three with term k+1 doubled: 1, 3, ..., 3^{k-1}, 2*3^k, 3^{k+1}, ...
inline SequenceFamily doubled_base3_family(int k, int n_terms = 64) {
  if (k < 0) throw std::invalid_argument("doubled_base3_family: k must be >= 0");
  if (n_terms <= k + 1) throw std::invalid_argument("doubled_base3_family: need more terms than k+1");
  auto terms = detail::powers_of_three(n_terms);
  terms[k] *= 2;
  return SequenceFamily::explicit_list(std::move(terms), 1, 1, "b_k:" + std::to_string(k));
}

// Fixture names: "example5.1a", "example5.1b", "example5.1c", "b_k:<k>".
inline SequenceFamily fixture_by_name(const std::string& name, int n_terms = 48) {
  if (n_terms < 8) throw std::invalid_argument("fixture_by_name: need at least 8 terms");
  auto with_front = [&](std::vector<BigInt> front) {
    auto terms = detail::powers_of_three(n_terms);
    for (std::size_t i = 0; i < front.size(); ++i) terms[i] = front[i];
    return SequenceFamily::explicit_list(std::move(terms), 1, 1, name);
  };
  if (name == "example5.1a") return with_front({2, 6});
  if (name == "example5.1b") return with_front({3, 4});
  if (name == "example5.1c") return with_front({1, 9, 12});
  if (name.rfind("b_k:", 0) == 0) {
    const int k = std::stoi(name.substr(4));
    return doubled_base3_family(k, n_terms);
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

inline std::vector<std::string> fixture_names() {
  return {"example5.1a", "example5.1b", "example5.1c", "b_k:<k>"};
}

enum class BijectionDirection { standard_to_bk, bk_to_standard };

// Rewrites a signed base-3 representation into one over the doubled
// family (or back), preserving the value. Only the term at index k+1
// (exponent k) triggers rewriting: 3^k = 3^{k+1} - 2*3^k going in,
// 2*3^k = 3^{k+1} - 3^k coming back; a doubled power produced along the
// way becomes 2*3^e = 3^{e+1} - 3^e, so each step moves the affected
// exponent up and the rewriting terminates.
inline SignedDecomposition base3_bijection(const SignedDecomposition& dec,
                                           BijectionDirection direction,
                                           int shift_position) {
  const int k = shift_position;
  if (k < 0) throw std::invalid_argument("base3_bijection: shift_position must be >= 0");

  std::map<int, int> coeff;  // exponent -> coefficient in {-1, 0, +1}
  int special = 0;           // sign of the doubled term 2*3^k, if present
  for (const auto& t : dec.terms) {
    if (direction == BijectionDirection::bk_to_standard && t.index == k + 1) special = t.sign;
    else coeff[t.index - 1] = t.sign;
  }

  int carry = 0;
  if (direction == BijectionDirection::standard_to_bk) {
    auto it = coeff.find(k);
    if (it != coeff.end() && it->second != 0) {
      const int sigma = it->second;
      coeff.erase(it);
      special = -sigma;
      carry = sigma;
    }
  } else if (special != 0) {
    coeff[k] = -special;
    carry = special;
    special = 0;
  }
  for (int e = k + 1; carry != 0; ++e) {
    int& c = coeff[e];
    if (c == 0) { c = carry; carry = 0; }
    else if (c == carry) { c = -carry; }       // doubled: 2*3^e = 3^{e+1} - 3^e
    else { c = 0; carry = 0; }                 // opposite signs cancel
  }

  int top = k + 1;
  for (const auto& [e, c] : coeff)
    if (c != 0) top = std::max(top, e + 1);
  SignedDecomposition out{{}, direction == BijectionDirection::standard_to_bk
                                  ? doubled_base3_family(k, std::max(64, top + 4))
                                  : base3_standard_family()};
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
    if (it->second != 0) out.terms.push_back({it->first + 1, it->second});
  if (special != 0) {
    SignedTerm sp{k + 1, special};
    auto pos = std::lower_bound(out.terms.begin(), out.terms.end(), sp,
                                [](const SignedTerm& a, const SignedTerm& b) {
                                  return a.index > b.index;
                                });
    out.terms.insert(pos, sp);
  }
  return out;
}

}  // namespace fardiff
