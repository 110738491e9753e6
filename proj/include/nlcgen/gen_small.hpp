/* Copyright 2026 The nlcgen Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Periodic sequences of nonlinear complexity at most n/2.
//
// B(n,c) is enumerated directly from its structured prefixes. S(n,w) keeps
// the members of B0(n,w) (no added terms) none of whose rotations lies in
// B(n,w+1), the identity rotation included (a member of B0(n,w) can also
// sit in B(n,w+1) under another spacing). The rotation closure of S(n,w)
// is every n-periodic sequence of complexity w.

#ifndef NLCGEN_GEN_SMALL_HPP
#define NLCGEN_GEN_SMALL_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "nlcgen/bitseq.hpp"
#include "nlcgen/op_counter.hpp"
#include "nlcgen/shift_class.hpp"
#include "nlcgen/structure.hpp"

namespace nlcgen {

/// Above this estimated size B(n,c) is probed structurally instead of
/// through a materialised table.
inline constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 22;

namespace detail {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

inline void check_B_args(int n, int c) {
  if (n < 2 || n > kMaxLength) {
    throw std::out_of_range("length n=" + std::to_string(n) + " outside [2, " +
                            std::to_string(kMaxLength) + "]");
  }
  if (c < 1 || c >= n) {
    throw std::out_of_range("c=" + std::to_string(c) + " outside [1, n)");
  }
}

inline std::uint64_t estimated_B_size(int n, int c) {
  const int dmax = std::min(n - c, n / 2);
  return static_cast<std::uint64_t>(dmax) << (n - c);
}

struct PrefixItem {
  int d;
  word_t prefix;
};

inline std::vector<PrefixItem> aperiodic_prefixes(int dmax) {
  std::vector<PrefixItem> items;
  for (int d = 1; d <= dmax; ++d) {
    for (word_t v = 0; v < (word_t{1} << d); ++v) {
      if (least_period(v, d) == d) items.push_back({d, v});
    }
  }
  return items;
}

// Sorted, duplicate-free words of B(n,c), or of its add-free part B0(n,c)
// when zero_add is set.
inline std::vector<word_t> gen_B_words(int n, int c, bool zero_add, const GenOptions& opt) {
  check_B_args(n, c);
  if (estimated_B_size(n, c) > kMaxCandidates) {
    throw std::length_error("B(" + std::to_string(n) + "," + std::to_string(c) +
                            ") is too large to enumerate");
  }
  const bool skip_aperiodic_test = c >= n / 2 || is_prime(n);
  const auto items = aperiodic_prefixes(std::min(n - c, n / 2));
  std::vector<std::vector<word_t>> shards(items.size());

  parallel_shards(items.size(), opt.workers, [&](std::size_t idx) {
    const auto [d, v] = items[idx];
    const int tail = n - c - d;
    const word_t head = structured_prefix(v, d, c) << tail;
    auto& out = shards[idx];
    auto emit = [&](word_t w) {
      if (skip_aperiodic_test || least_period(w, n) == n) out.push_back(w);
    };
    if (!zero_add) {
      for (word_t t = 0; t < (word_t{1} << tail); ++t) emit(head | t);
    } else if (tail == 0) {
      if (bit_at(head, n - 1, n) != bit_at(head, d - 1, n)) emit(head);
    } else {
      const word_t last = static_cast<word_t>(bit_at(head, d - 1, n) ^ 1);
      for (word_t t = 0; t < (word_t{1} << (tail - 1)); ++t) emit(head | (t << 1) | last);
    }
    count(opt.ops, zero_add && tail > 0 ? (word_t{1} << (tail - 1))
                                        : (zero_add ? 1 : (word_t{1} << tail)));
  });

  std::vector<word_t> all;
  for (auto& s : shards) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

inline std::vector<BitSeq> to_seqs(const std::vector<word_t>& words, int n) {
  std::vector<BitSeq> out;
  out.reserve(words.size());
  for (word_t w : words) out.push_back(BitSeq::from_word(w, n));
  return out;
}

// Membership oracle for B(n,c): a hash table when small enough, otherwise
// the structural test.
class BMembership {
 public:
  BMembership(int n, int c, const GenOptions& opt) : n_(n), c_(c) {
    if (c >= n) return;  // B(n, n) is empty
    if (estimated_B_size(n, c) <= kMaxTableSize) {
      const auto words = gen_B_words(n, c, false, opt);
      table_.reserve(words.size() * 2);
      table_.insert(words.begin(), words.end());
      materialised_ = true;
    }
  }

  bool contains(word_t w) const {
    if (c_ >= n_) return false;
    if (materialised_) return table_.count(w) != 0;
    return in_B_word(w, n_, c_);
  }

  bool materialised() const { return materialised_; }

 private:
  int n_;
  int c_;
  bool materialised_ = false;
  std::unordered_set<word_t> table_;
};

inline std::vector<word_t> filter_no_rotation_in(const std::vector<word_t>& candidates, int n,
                                                 const BMembership& banned,
                                                 const GenOptions& opt) {
  const std::size_t chunk = 1024;
  const std::size_t shards = (candidates.size() + chunk - 1) / chunk;
  std::vector<std::vector<word_t>> out(shards);
  parallel_shards(shards, opt.workers, [&](std::size_t s) {
    std::uint64_t probes = 0;
    const std::size_t end = std::min(candidates.size(), (s + 1) * chunk);
    for (std::size_t i = s * chunk; i < end; ++i) {
      const word_t w = candidates[i];
      bool keep = true;
      for (int k = 0; k < n && keep; ++k) {
        ++probes;
        keep = !banned.contains(rotl(w, k, n));
      }
      if (keep) out[s].push_back(w);
    }
    count(opt.ops, probes);
  });
  std::vector<word_t> all;
  for (auto& v : out) all.insert(all.end(), v.begin(), v.end());
  return all;
}

inline void check_small_range(int n, int omega) {
  if (n < 2 || n > kMaxLength) {
    throw std::out_of_range("length n=" + std::to_string(n) + " outside [2, " +
                            std::to_string(kMaxLength) + "]");
  }
  if (omega < 1 || omega > n / 2) {
    throw std::out_of_range("omega=" + std::to_string(omega) +
                            " outside [1, floor(n/2)] for the small-complexity generator");
  }
}

inline std::vector<ShiftClass> classes_of_S(const std::vector<word_t>& s_words, int n, int omega) {
  std::vector<ShiftClass> items;
  items.reserve(s_words.size());
  for (word_t w : s_words) {
    ShiftClass k;
    k.canonical = BitSeq::from_word(min_rotation(w, n), n);
    k.omega = omega;
    k.witness = BitSeq::from_word(w, n);
    for (const BForm& f : decompose(k.witness)) {
      if (f.c == omega && add_count_word(w, n, f.d) == 0) {
        k.form = f;
        break;
      }
    }
    k.add = 0;
    items.push_back(k);
  }
  return to_classes(std::move(items));
}

}  // namespace detail

/// All of B(n, c), sorted.
inline std::vector<BitSeq> gen_B(int n, int c, const GenOptions& opt = {}) {
  return detail::to_seqs(detail::gen_B_words(n, c, false, opt), n);
}

/// Members of B(n, c) built with a forced final symbol so they carry no
/// added terms, sorted.
inline std::vector<BitSeq> gen_B0(int n, int c, const GenOptions& opt = {}) {
  return detail::to_seqs(detail::gen_B_words(n, c, true, opt), n);
}

struct SmallResult {
  std::vector<BitSeq> s_set;         // S(n, omega), sorted
  std::vector<ShiftClass> classes;   // its rotation classes, sorted
};

/// S(n, omega) and P(n, omega) for ceil(log2 n) <= omega <= floor(n/2);
/// both empty below the log bound, where no periodic sequence exists.
inline SmallResult gen_small(int n, int omega, const GenOptions& opt = {}) {
  detail::check_small_range(n, omega);
  if (omega < ceil_log2(n)) return {};
  const auto b0 = detail::gen_B_words(n, omega, true, opt);
  const detail::BMembership banned(n, omega + 1, opt);
  const auto s = detail::filter_no_rotation_in(b0, n, banned, opt);
  return {detail::to_seqs(s, n), detail::classes_of_S(s, n, omega)};
}

inline std::vector<BitSeq> gen_S_small(int n, int omega, const GenOptions& opt = {}) {
  return gen_small(n, omega, opt).s_set;
}

/// Shift classes of P(n, omega), sorted by canonical pattern.
inline std::vector<ShiftClass> gen_P_small(int n, int omega, const GenOptions& opt = {}) {
  return gen_small(n, omega, opt).classes;
}

}  // namespace nlcgen

#endif  // NLCGEN_GEN_SMALL_HPP
