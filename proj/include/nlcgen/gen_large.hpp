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
// Periodic sequences of nonlinear complexity at least n/2.
//
// With c = ceil(n/2), every such class has a representative in B(n,c): the
// rotation in B(n,c) carrying the most added terms, and its periodic
// complexity is c + add. Representatives are found without materialising
// B(n,c): a sequence can only share its class with another member of
// B(n,c) when its tail obeys s_i = s_{i+d'} from a fixed start g onward,
// and in that case the partner's rotation amount and added terms follow
// from the maximal run of that relation.

#ifndef NLCGEN_GEN_LARGE_HPP
#define NLCGEN_GEN_LARGE_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nlcgen/bitseq.hpp"
#include "nlcgen/op_counter.hpp"
#include "nlcgen/shift_class.hpp"
#include "nlcgen/structure.hpp"

namespace nlcgen {

/// A rotation partner R^h(s) in B(n,c,d') predicted from the run of
/// s_i = s_{i+d'} through [r1, r2).
struct EquivCandidate {
  int d_prime = 0;
  int g = 0;       // start of the constrained tail
  int r1 = 0;      // may be negative: indices are taken mod n
  int r2 = 0;      // may exceed n - 1
  int c_prime = 0; // r2 - r1 + 1
  int h = 0;       // right-rotation amount, in [0, n)
  int delta = 0;   // added terms of the partner, c' - c
  BitSeq partner;
  bool in_window = true;  // h inside the admissible rotation window
};

namespace detail {

inline int gen_large_c(int n) { return (n + 1) / 2; }

inline bool cyc_eq(word_t w, int n, long long i, long long j) {
  return bit_at(w, mod(i, n), n) == bit_at(w, mod(j, n), n);
}

// Whether the d'-window of w starting at `start` is aperiodic.
inline bool window_aperiodic(word_t w, int n, int start, int len) {
  const word_t win = (w >> (n - start - len)) & low_mask(len);
  return least_period(win, len) == len;
}

// Rotation amounts h for which a partner R^h(s) in B(n,c,d') can exist.
inline bool h_in_window(int n, int c, int d, int dp, int h) {
  const bool first = n - (c + d) + dp <= h && h < c + dp;
  const bool second = n - (c + d) < h && h <= c + dp - d;
  return first || second;
}

// Runs the relation s_i = s_{i+dp} outward from [g, n-dp) and derives the
// partner. Requires the relation to hold on [g, n-dp).
inline EquivCandidate extend_candidate(word_t w, int n, int c, int d, int dp, int g) {
  EquivCandidate k;
  k.d_prime = dp;
  k.g = g;
  int r1 = g;
  for (int steps = 0; steps < n && cyc_eq(w, n, r1 - 1, r1 + dp - 1); ++steps) --r1;
  int r2 = n - dp;
  for (int steps = 0; steps < n && cyc_eq(w, n, r2, r2 + dp); ++steps) ++r2;
  k.r1 = r1;
  k.r2 = r2;
  k.c_prime = r2 - r1 + 1;
  k.delta = k.c_prime - c;
  k.h = mod(static_cast<long long>(c) + (n - r2 - 1), n);
  k.partner = BitSeq::from_word(rotl(w, mod(-static_cast<long long>(k.h), n), n), n);
  k.in_window = h_in_window(n, c, d, dp, k.h);
  return k;
}

inline bool relation_holds(word_t w, int n, int dp, int from, int to) {
  for (int i = from; i < to; ++i) {
    if (!cyc_eq(w, n, i, i + dp)) return false;
  }
  return true;
}

// Tail of the structured prefix continued with period dp.
inline word_t fill_tail(word_t head, int head_len, int n, int dp) {
  word_t w = head;
  for (int i = head_len; i < n; ++i) {
    const int bit = static_cast<int>((w >> (dp - 1)) & 1u);  // s_{i-dp}
    w = (w << 1) | static_cast<word_t>(bit);
  }
  return w;
}

}  // namespace detail

/// Every actionable (c' >= c) rotation partner of s in B(n,c) predicted by
/// the run structure of s, for c = ceil(n/2).
inline std::vector<EquivCandidate> equiv_candidates(const BitSeq& s, const BForm& form) {
  const int n = s.size();
  const int c = detail::gen_large_c(n);
  if (n < 4 || form.c != c || !has_form(s, form)) {
    throw std::invalid_argument("equiv_candidates: " + s.to_string() +
                                " is not in B(n, ceil(n/2), d) for the given form");
  }
  const int d = form.d;
  const word_t w = s.word();
  std::vector<EquivCandidate> out;
  for (int dp = 1; dp <= n - c; ++dp) {
    int g = 0;
    if (d < n - c) {
      if (!detail::window_aperiodic(w, n, c + d - dp, dp)) continue;
      g = c + d - dp;
    } else {
      if (!detail::window_aperiodic(w, n, n - dp, dp)) continue;
      g = 2 * d - dp - 1;
    }
    if (!detail::relation_holds(w, n, dp, g, n - dp)) continue;
    auto k = detail::extend_candidate(w, n, c, d, dp, g);
    if (k.delta >= 0) out.push_back(k);
  }
  return out;
}

/// One member of R(n, ceil(n/2)).
struct RepEntry {
  BitSeq seq;
  BForm form;
  int add = 0;
};

struct GenRStats {
  std::uint64_t constructed = 0;        // sequences built
  std::uint64_t candidates = 0;         // partners predicted
  std::uint64_t window_violations = 0;  // partners whose h left the window
  std::uint64_t excluded_tails = 0;     // tails dropped through V
  std::uint64_t excluded_seqs = 0;      // |U|
  std::uint64_t merged_duplicates = 0;  // survivors folded by the class pass
  std::uint64_t lower_add_survivors = 0;  // folded survivors with smaller add
};

struct GenRResult {
  int n = 0;
  int c = 0;
  std::vector<RepEntry> reps;  // sorted by sequence
  GenRStats stats;
};

/// R(n, ceil(n/2)): one representative (maximal added terms) per rotation
/// class meeting B(n, ceil(n/2)). Ties go to the lexicographically least
/// member.
inline GenRResult gen_R(int n, const GenOptions& opt = {}) {
  if (n < 4 || n > kMaxLength) {
    throw std::out_of_range("gen_R needs 4 <= n <= " + std::to_string(kMaxLength));
  }
  const int c = detail::gen_large_c(n);
  if (static_cast<std::uint64_t>(n - c) << (n - c) > kMaxCandidates) {
    throw std::length_error("gen_R(" + std::to_string(n) + ") is too large");
  }
  GenRResult res;
  res.n = n;
  res.c = c;
  GenRStats& st = res.stats;

  struct Raw {
    word_t w;
    int d;
  };
  std::vector<Raw> kept;
  std::unordered_set<word_t> U;

  auto note_candidate = [&](const EquivCandidate& k) {
    ++st.candidates;
    if (!k.in_window) ++st.window_violations;
  };

  for (int d = 1; d <= n - c; ++d) {
    for (word_t v = 0; v < (word_t{1} << d); ++v) {
      if (detail::least_period(v, d) != d) continue;
      const word_t head = detail::structured_prefix(v, d, c);
      if (d < n - c) {
        const int tail = n - c - d;
        std::unordered_set<word_t> V;
        for (int dp = 1; dp <= n - c; ++dp) {
          if (!detail::window_aperiodic(head << tail, n, c + d - dp, dp)) continue;
          const word_t w = detail::fill_tail(head, c + d, n, dp);
          ++st.constructed;
          count(opt.ops, 1);
          if (U.count(w)) continue;
          const auto k = detail::extend_candidate(w, n, c, d, dp, c + d - dp);
          if (k.delta < 0) continue;
          note_candidate(k);
          if (detail::add_count_word(w, n, d) < k.delta) {
            V.insert(w & detail::low_mask(tail));
          } else {
            U.insert(k.partner.word());
          }
        }
        for (word_t t = 0; t < (word_t{1} << tail); ++t) {
          if (!V.count(t)) kept.push_back({(head << tail) | t, d});
        }
        st.constructed += word_t{1} << tail;
        st.excluded_tails += V.size();
        count(opt.ops, word_t{1} << tail);
      } else {
        const word_t w = head;
        ++st.constructed;
        count(opt.ops, 1);
        if (U.count(w)) continue;
        kept.push_back({w, d});
        const int add = detail::add_count_word(w, n, d);
        for (int dp = 1; dp <= n - c; ++dp) {
          if (!detail::window_aperiodic(w, n, n - dp, dp)) continue;
          const int g = 2 * d - dp - 1;
          if (!detail::relation_holds(w, n, dp, g, n - dp)) continue;
          const auto k = detail::extend_candidate(w, n, c, d, dp, g);
          if (k.delta < 0) continue;
          note_candidate(k);
          U.insert(add < k.delta ? w : k.partner.word());
        }
      }
    }
  }
  st.excluded_seqs = U.size();

  // Class pass: one survivor per rotation class, most added terms first.
  struct Best {
    word_t w;
    int d;
    int add;
  };
  std::unordered_map<word_t, Best> best;
  best.reserve(kept.size());
  for (const Raw& r : kept) {
    if (U.count(r.w)) continue;
    count(opt.ops, static_cast<std::uint64_t>(n));
    const int add = detail::add_count_word(r.w, n, r.d);
    const word_t key = detail::min_rotation(r.w, n);
    auto [it, fresh] = best.try_emplace(key, Best{r.w, r.d, add});
    if (fresh) continue;
    ++st.merged_duplicates;
    Best& b = it->second;
    if (add != b.add) ++st.lower_add_survivors;
    if (add > b.add || (add == b.add && r.w < b.w)) b = {r.w, r.d, add};
  }
  res.reps.reserve(best.size());
  for (const auto& [key, b] : best) {
    res.reps.push_back({BitSeq::from_word(b.w, n), BForm::make(c, b.d), b.add});
  }
  std::sort(res.reps.begin(), res.reps.end(),
            [](const RepEntry& a, const RepEntry& b) { return a.seq < b.seq; });
  return res;
}

/// Classes of the representatives with add = omega - c.
inline std::vector<ShiftClass> classes_from_reps(const GenRResult& r, int omega) {
  std::vector<ShiftClass> out;
  for (const RepEntry& e : r.reps) {
    if (e.add != omega - r.c) continue;
    ShiftClass k;
    k.canonical = canonical_rotation(e.seq).seq;
    k.omega = omega;
    k.witness = e.seq;
    k.form = e.form;
    k.add = e.add;
    out.push_back(k);
  }
  return to_classes(std::move(out));
}

/// Shift classes of P(n, omega) for ceil(n/2) <= omega <= n-1.
inline std::vector<ShiftClass> gen_P_large(int n, int omega, const GenOptions& opt = {}) {
  if (n < 4 || n > kMaxLength) {
    throw std::out_of_range("gen_P_large needs 4 <= n <= " + std::to_string(kMaxLength));
  }
  const int c = detail::gen_large_c(n);
  if (omega < c || omega > n - 1) {
    throw std::out_of_range("omega=" + std::to_string(omega) + " outside [ceil(n/2), n-1]");
  }
  return classes_from_reps(gen_R(n, opt), omega);
}

}  // namespace nlcgen

#endif  // NLCGEN_GEN_LARGE_HPP
