#pragma once

// Decomposition bases and their partial sums.
//
// A family is one of:
//   * Skipponacci(k):  a_i = i for i <= k+1, then a_{i} = a_{i-1} + a_{i-1-k}.
//     Viewed as an (s,d) family it has s = 2k+2 and d = k+2.
//   * StandardSD(s,d): a_i = i for i <= min(s,d); for min(s,d) < i <= max(s,d)
//     either a_{i-1} + a_{i-s} (s < d) or a_{i-1} + a_{i-d} + 1 (d <= s);
//     then a_i = a_{i-1} + a_{i-s} + a_{i-d}.
//   * Explicit: a fixed term list with declared (s,d).
//
// R(n) = a_n + a_{n-s} + a_{n-2s} + ... (0 for n <= 0) is the largest value
// decomposable with leading term a_n; the identity
//   a_n - R(n-1) - R(n-d) = 1
// makes the intervals (R(n-1), R(n)] a disjoint cover of the positive
// integers, which is what the decomposer walks down.

#include <algorithm>
#include <atomic>
#include <climits>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fardiff/bigint.hpp"

namespace fardiff {

enum class FamilyKind { skipponacci, standard_sd, explicit_list };

namespace detail {

// Append-only 1-based sequence with a release-published length. Published
// elements may be read without locking even while a writer (serialized
// externally) appends: storage is chunked behind a fixed pointer table, so
// growth never moves or touches published elements.
class PublishedSeries {
  static constexpr int kChunkBits = 9;
  static constexpr int kChunkSize = 1 << kChunkBits;
  static constexpr int kMaxChunks = 1 << 13;  // ~4.2M terms

 public:
  PublishedSeries() : chunks_(kMaxChunks) {}
  PublishedSeries(const PublishedSeries&) = delete;
  PublishedSeries& operator=(const PublishedSeries&) = delete;

  int published() const { return ready_.load(std::memory_order_acquire); }

  // pre: 1 <= i <= published() (or the caller is the serialized writer)
  const BigInt& operator[](int i) const {
    return chunks_[(i - 1) >> kChunkBits][(i - 1) & (kChunkSize - 1)];
  }

  // Writer side; calls must be serialized by the owner.
  int size() const { return size_; }
  void append(BigInt v) {
    const int chunk = size_ >> kChunkBits;
    if (chunk >= kMaxChunks) throw std::length_error("PublishedSeries: capacity exhausted");
    if (!chunks_[chunk]) chunks_[chunk] = std::make_unique<BigInt[]>(kChunkSize);
    chunks_[chunk][size_ & (kChunkSize - 1)] = std::move(v);
    ++size_;
  }
  void publish() { ready_.store(size_, std::memory_order_release); }

 private:
  std::vector<std::unique_ptr<BigInt[]>> chunks_;
  int size_ = 0;
  std::atomic<int> ready_{0};
};

}  // namespace detail

// Value type; copies share one lazily extended cache. Extension is
// serialized behind a mutex and published with release semantics, so
// already-published terms can be read concurrently without locking.
class SequenceFamily {
 public:
  static SequenceFamily skipponacci(int k) {
    if (k < 0) throw std::invalid_argument("skipponacci: k must be >= 0");
    auto st = std::make_shared<State>();
    st->kind = FamilyKind::skipponacci;
    st->k = k;
    st->s = 2 * k + 2;
    st->d = k + 2;
    st->name = "skipponacci(k=" + std::to_string(k) + ")";
    return SequenceFamily(std::move(st));
  }

  static SequenceFamily standard_sd(int s, int d) {
    if (s < 1 || d < 1) throw std::invalid_argument("standard_sd: s, d must be >= 1");
    auto st = std::make_shared<State>();
    st->kind = FamilyKind::standard_sd;
    st->s = s;
    st->d = d;
    st->name = "sd(" + std::to_string(s) + "," + std::to_string(d) + ")";
    return SequenceFamily(std::move(st));
  }

  static SequenceFamily explicit_list(std::vector<BigInt> terms, int s, int d,
                                      std::string name = "explicit") {
    if (s < 1 || d < 1) throw std::invalid_argument("explicit_list: s, d must be >= 1");
    if (terms.empty()) throw std::invalid_argument("explicit_list: empty term list");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i] <= 0 || (i > 0 && terms[i] <= terms[i - 1]))
        throw std::invalid_argument("explicit_list: terms must be positive and strictly increasing");
    }
    auto st = std::make_shared<State>();
    st->kind = FamilyKind::explicit_list;
    st->s = s;
    st->d = d;
    st->name = std::move(name);
    st->max_index = static_cast<int>(terms.size());
    {
      std::lock_guard<std::mutex> lock(st->mu);
      for (auto& t : terms) st->terms.append(std::move(t));
      st->terms.publish();
    }
    return SequenceFamily(std::move(st));
  }

  FamilyKind kind() const { return state_->kind; }
  int k() const { return state_->k; }  // -1 unless Skipponacci
  int s() const { return state_->s; }
  int d() const { return state_->d; }
  const std::string& name() const { return state_->name; }
  int max_index() const { return state_->max_index; }

  // 1-based; indices <= 0 read as value 0.
  BigInt term(int i) const {
    if (i <= 0) return 0;
    ensure_terms(i);
    return state_->terms[i];
  }

  BigInt r_sum(int n) const {
    if (n <= 0) return 0;
    ensure_rsums(n);
    return state_->rsums[n];
  }

  // a_n - R(n-1) - R(n-d) == 1, exactly.
  bool check_interval_identity(int n) const {
    return term(n) - r_sum(n - 1) - r_sum(n - d()) == 1;
  }

  // Smallest n with R(n) >= x. Pre: x >= 1. Extends the cache as needed;
  // throws std::out_of_range if an explicit family cannot reach x.
  int interval_index(const BigInt& x) const {
    if (x < 1) throw std::invalid_argument("interval_index: x must be >= 1");
    int hi = 1;
    while (r_sum(hi) < x) {
      if (hi >= state_->max_index)
        throw std::out_of_range(name() + ": term list exhausted before reaching R(n) >= x");
      hi = hi > state_->max_index / 2 ? state_->max_index : hi * 2;
    }
    int lo = 1;
    while (lo < hi) {
      int mid = lo + (hi - lo) / 2;
      if (r_sum(mid) >= x) hi = mid; else lo = mid + 1;
    }
    return lo;
  }

  friend bool operator==(const SequenceFamily& a, const SequenceFamily& b) {
    if (a.state_ == b.state_) return true;
    if (a.kind() != b.kind() || a.s() != b.s() || a.d() != b.d() || a.k() != b.k()) return false;
    if (a.kind() != FamilyKind::explicit_list) return true;
    if (a.max_index() != b.max_index()) return false;
    for (int i = 1; i <= a.max_index(); ++i)
      if (a.term(i) != b.term(i)) return false;
    return true;
  }

 private:
  struct State {
    FamilyKind kind = FamilyKind::skipponacci;
    int k = -1;
    int s = 0, d = 0;
    int max_index = INT_MAX;
    std::string name;

    mutable std::mutex mu;
    mutable detail::PublishedSeries terms;  // terms[i] = a_i
    mutable detail::PublishedSeries rsums;  // rsums[n] = R(n)
  };

  explicit SequenceFamily(std::shared_ptr<State> st) : state_(std::move(st)) {}

  void ensure_terms(int n) const {
    State& st = *state_;
    if (st.terms.published() >= n) return;
    if (n > st.max_index)
      throw std::out_of_range(st.name + ": term index " + std::to_string(n) + " beyond term list");
    std::lock_guard<std::mutex> lock(st.mu);
    auto at = [&st](int i) -> const BigInt& {
      static const BigInt zero = 0;
      return i <= 0 ? zero : st.terms[i];
    };
    for (int i = st.terms.size() + 1; i <= n; ++i) {
      BigInt next;
      if (st.kind == FamilyKind::skipponacci) {
        next = i <= st.k + 1 ? BigInt(i) : BigInt(at(i - 1) + at(i - 1 - st.k));
      } else {
        const int lo = std::min(st.s, st.d), hi = std::max(st.s, st.d);
        if (i <= lo) {
          next = i;
        } else if (i <= hi) {
          next = st.s < st.d ? BigInt(at(i - 1) + at(i - st.s))
                             : BigInt(at(i - 1) + at(i - st.d) + 1);
        } else {
          next = at(i - 1) + at(i - st.s) + at(i - st.d);
        }
      }
      st.terms.append(std::move(next));
    }
    st.terms.publish();
  }

  // R(n) = a_n + R(n - s); memoized, O(1) amortized per new index.
  void ensure_rsums(int n) const {
    State& st = *state_;
    if (st.rsums.published() >= n) return;
    ensure_terms(n);
    std::lock_guard<std::mutex> lock(st.mu);
    for (int i = st.rsums.size() + 1; i <= n; ++i) {
      BigInt r = st.terms[i];
      if (i > st.s) r += st.rsums[i - st.s];
      st.rsums.append(std::move(r));
    }
    st.rsums.publish();
  }

  std::shared_ptr<State> state_;
};

inline std::vector<BigInt> skipponacci_terms(int k, int n_max) {
  if (n_max < 1) throw std::invalid_argument("skipponacci_terms: n_max must be >= 1");
  auto fam = SequenceFamily::skipponacci(k);
  std::vector<BigInt> out;
  out.reserve(n_max);
  for (int i = 1; i <= n_max; ++i) out.push_back(fam.term(i));
  return out;
}

inline std::vector<BigInt> sd_terms(int s, int d, int n_max) {
  if (n_max < 1) throw std::invalid_argument("sd_terms: n_max must be >= 1");
  auto fam = SequenceFamily::standard_sd(s, d);
  std::vector<BigInt> out;
  out.reserve(n_max);
  for (int i = 1; i <= n_max; ++i) out.push_back(fam.term(i));
  return out;
}

inline BigInt r_sum(const SequenceFamily& family, int n) { return family.r_sum(n); }

inline bool check_interval_identity(const SequenceFamily& family, int n) {
  return family.check_interval_identity(n);
}

}  // namespace fardiff
