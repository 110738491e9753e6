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
// Binary de Bruijn sequences of order m as the n = 2^m, omega = m case of
// the small-complexity generator.
//
// Up to rotation every such sequence starts 0^m 1 and ends in 1, and its
// middle block has weight 2^(m-1) - 2. Candidates are enumerated by
// constant-weight stepping, screened by their run distribution, then
// filtered against B(2^m, m+1).

#ifndef NLCGEN_GEN_DEBRUIJN_HPP
#define NLCGEN_GEN_DEBRUIJN_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlcgen/bitseq.hpp"
#include "nlcgen/gen_small.hpp"
#include "nlcgen/op_counter.hpp"
#include "nlcgen/shift_class.hpp"

namespace nlcgen {

/// Expected cyclic run counts of an order-m de Bruijn sequence.
struct RunSpec {
  int m = 0;
  std::map<int, int> runs;  // same for both symbols

  int implied_length() const {
    int len = 0;
    for (auto [l, k] : runs) len += 2 * l * k;
    return len;
  }
  int implied_weight() const { return implied_length() / 2; }
};

inline RunSpec run_spec(int m) {
  if (m < 2) throw std::out_of_range("run_spec needs m >= 2");
  RunSpec r;
  r.m = m;
  for (int i = 1; i < m - 1; ++i) r.runs[i] = 1 << (m - 2 - i);
  r.runs[m] = 1;
  return r;
}

namespace detail {

inline void check_order(int m) {
  if (m < 3 || m > 5) {
    throw std::out_of_range("de Bruijn order m=" + std::to_string(m) + " outside [3, 5]");
  }
}

// Cyclic run histogram of a non-constant word; true iff it matches.
inline bool runs_match(word_t w, int n, const RunSpec& spec) {
  std::map<int, int> zero, one;
  int start = 0;
  while (bit_at(w, mod(start - 1, n), n) == bit_at(w, start, n)) ++start;
  int i = 0;
  while (i < n) {
    const int sym = bit_at(w, mod(start + i, n), n);
    int len = 0;
    while (i < n && bit_at(w, mod(start + i, n), n) == sym) {
      ++len;
      ++i;
    }
    if (spec.runs.find(len) == spec.runs.end()) return false;
    ++(sym ? one : zero)[len];
  }
  return zero == spec.runs && one == spec.runs;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// The rank-th k-subset of [0, len) in increasing numeric order of its
// bitmask.
inline word_t unrank_combination(std::uint64_t rank, int len, int k) {
  word_t w = 0;
  for (int bit = len - 1; bit >= 0 && k > 0; --bit) {
    const std::uint64_t below = binomial(bit, k);  // subsets without this bit
    if (rank >= below) {
      w |= word_t{1} << bit;
      rank -= below;
      --k;
    }
  }
  return w;
}

// Next bitmask with the same popcount.
inline word_t next_combination(word_t v) {
  const word_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

inline std::vector<word_t> gen_B0_tilde_words(int m, const GenOptions& opt) {
  check_order(m);
  const int n = 1 << m;
  const int len = n - m - 2;
  const int weight = (1 << (m - 1)) - 2;
  const word_t head = word_t{1} << (n - m - 1);  // 0^m 1 in the top m+1 bits
  const RunSpec spec = run_spec(m);
  const std::uint64_t total = binomial(len, weight);
  const std::size_t shards = static_cast<std::size_t>(std::min<std::uint64_t>(total, 64));
  std::vector<std::vector<word_t>> out(shards);
  parallel_shards(shards, opt.workers, [&](std::size_t s) {
    const std::uint64_t lo = total * s / shards;
    const std::uint64_t hi = total * (s + 1) / shards;
    word_t mid = unrank_combination(lo, len, weight);
    for (std::uint64_t r = lo; r < hi; ++r) {
      const word_t w = head | (mid << 1) | 1u;
      if (runs_match(w, n, spec)) out[s].push_back(w);
      if (r + 1 < hi) mid = next_combination(mid);
    }
    count(opt.ops, hi - lo);
  });
  std::vector<word_t> all;
  for (auto& v : out) all.insert(all.end(), v.begin(), v.end());
  return all;  // ascending: shards are rank-ordered
}

}  // namespace detail

/// Cyclic run distribution of s equals the order-m de Bruijn one.
inline bool check_run_properties(const BitSeq& s, int m) {
  if (m < 2 || m > 6 || s.size() != (1 << m)) {
    throw std::invalid_argument("check_run_properties: length " + std::to_string(s.size()) +
                                " is not 2^" + std::to_string(m));
  }
  const RunHistogram h = cyclic_runs(s);
  const RunSpec spec = run_spec(m);
  return h.zero_runs == spec.runs && h.one_runs == spec.runs;
}

/// Every cyclic m-window of s is distinct (s has length 2^m).
inline bool is_de_bruijn(const BitSeq& s, int m) {
  const int n = s.size();
  if (n != (1 << m)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    int v = 0;
    for (int j = 0; j < m; ++j) v = (v << 1) | s.cyclic(i + j);
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

/// Candidates 0^m 1 x 1 with wt(x) = 2^(m-1) - 2 and the de Bruijn run
/// distribution, ascending.
inline std::vector<BitSeq> gen_B0_tilde(int m, const GenOptions& opt = {}) {
  return detail::to_seqs(detail::gen_B0_tilde_words(m, opt), 1 << m);
}

/// Rotation classes of de Bruijn sequences of order m (3 <= m <= 5).
inline std::vector<ShiftClass> gen_debruijn(int m, const GenOptions& opt = {}) {
  const int n = 1 << m;
  const auto cand = detail::gen_B0_tilde_words(m, opt);
  const detail::BMembership banned(n, m + 1, opt);
  return detail::classes_of_S(detail::filter_no_rotation_in(cand, n, banned, opt), n, m);
}

/// Candidate-set size by enumeration next to the two closed forms: the
/// squared run multinomial scaled by 2^-(2m-2) as printed, and by
/// 2^-(m-2), which matches enumeration.
struct B0TildeCount {
  std::uint64_t enumerated = 0;
  std::uint64_t multinomial = 0;
  double printed_formula = 0;
  double corrected_formula = 0;
  bool printed_matches = false;
  bool corrected_matches = false;
};

/// (2^(m-2))! / ((2^(m-3))! ... 2! 1! 1!).
inline std::uint64_t run_multinomial(int m) {
  detail::check_order(m);
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  std::uint64_t denom = fact(1);  // the trailing 1
  for (int e = m - 3; e >= 0; --e) denom *= fact(1 << e);
  return fact(1 << (m - 2)) / denom;
}

inline B0TildeCount count_B0_tilde(int m, const GenOptions& opt = {}) {
  B0TildeCount r;
  r.enumerated = detail::gen_B0_tilde_words(m, opt).size();
  r.multinomial = run_multinomial(m);
  const double sq = static_cast<double>(r.multinomial) * static_cast<double>(r.multinomial);
  r.printed_formula = sq / static_cast<double>(std::uint64_t{1} << (2 * m - 2));
  r.corrected_formula = sq / static_cast<double>(std::uint64_t{1} << (m - 2));
  r.printed_matches = r.printed_formula == static_cast<double>(r.enumerated);
  r.corrected_matches = r.corrected_formula == static_cast<double>(r.enumerated);
  return r;
}

}  // namespace nlcgen

#endif  // NLCGEN_GEN_DEBRUIJN_HPP
