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
// Nonlinear (maximum-order) complexity of finite and periodic sequences.
//
// nlc(s) is one plus the length of the longest word that occurs in s with
// two different successors, or 0 when no word has two successors. Two
// engines compute it: a direct window scan (the reference, also used by the
// exhaustive oracle) and a suffix automaton that runs in linear time.

#ifndef NLCGEN_COMPLEXITY_HPP
#define NLCGEN_COMPLEXITY_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "nlcgen/bitseq.hpp"
#include "nlcgen/op_counter.hpp"

namespace nlcgen {

namespace detail {

using key128 = unsigned __int128;

// Window keys for inputs up to 128 symbols (a doubled 64-bit period).
inline constexpr std::size_t kMaxSymbols = 128;

inline std::vector<std::uint8_t> symbols_of(const BitSeq& s, int repeat = 1) {
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(s.size() * repeat));
  for (int r = 0; r < repeat; ++r) {
    for (int i = 0; i < s.size(); ++i) out.push_back(static_cast<std::uint8_t>(s[i]));
  }
  return out;
}

// Open-addressing table reused across window lengths; `stamp` avoids
// clearing between rounds.
class WindowTable {
 public:
  static constexpr std::size_t kSlots = 512;

  void next_round() noexcept { ++round_; }

  // Records (key, successor); returns true when key was already seen with
  // the other successor.
  bool insert(key128 key, std::uint8_t succ) noexcept {
    std::size_t h = hash(key);
    for (;;) {
      Slot& slot = slots_[h];
      if (slot.stamp != round_) {
        slot = {key, succ, round_};
        return false;
      }
      if (slot.key == key) return slot.succ != succ;
      h = (h + 1) & (kSlots - 1);
    }
  }

 private:
  struct Slot {
    key128 key = 0;
    std::uint8_t succ = 0;
    std::uint32_t stamp = 0;
  };

  static std::size_t hash(key128 k) noexcept {
    const std::uint64_t lo = static_cast<std::uint64_t>(k);
    const std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ull);
    x ^= x >> 31;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 29;
    return static_cast<std::size_t>(x) & (kSlots - 1);
  }

  std::array<Slot, kSlots> slots_{};
  std::uint32_t round_ = 1;
};

// Reference scan: longest window length first, first hit wins.
inline int nlc_scan(std::span<const std::uint8_t> sym, OpCounter* ops = nullptr) {
  const int len = static_cast<int>(sym.size());
  if (sym.size() > kMaxSymbols) {
    throw std::invalid_argument("nlc_scan supports at most 128 symbols");
  }
  thread_local WindowTable table;
  std::uint64_t work = 0;
  for (int k = len - 2; k >= 0; --k) {
    table.next_round();
    const key128 mask = k == 0 ? 0 : (~key128{0} >> (128 - k));
    key128 key = 0;
    for (int i = 0; i < k; ++i) key = (key << 1) | sym[static_cast<std::size_t>(i)];
    bool hit = false;
    for (int i = 0; i + k < len; ++i) {
      if (i > 0) {
        key = ((key << 1) | sym[static_cast<std::size_t>(i + k - 1)]) & mask;
      }
      ++work;
      if (table.insert(key, sym[static_cast<std::size_t>(i + k)])) {
        hit = true;
        break;
      }
    }
    if (hit) {
      count(ops, work);
      return k + 1;
    }
  }
  count(ops, work);
  return 0;
}

// Binary suffix automaton; nlc = 1 + max len over states with both
// outgoing transitions (every word of a state shares its right contexts).
inline int nlc_automaton(std::span<const std::uint8_t> sym) {
  struct State {
    int len = 0;
    int link = -1;
    std::array<int, 2> next{-1, -1};
  };
  std::vector<State> st;
  st.reserve(2 * sym.size() + 2);
  st.push_back({});
  int last = 0;
  for (std::uint8_t ch : sym) {
    const int cur = static_cast<int>(st.size());
    st.push_back({st[static_cast<std::size_t>(last)].len + 1, -1, {-1, -1}});
    int p = last;
    while (p != -1 && st[static_cast<std::size_t>(p)].next[ch] == -1) {
      st[static_cast<std::size_t>(p)].next[ch] = cur;
      p = st[static_cast<std::size_t>(p)].link;
    }
    if (p == -1) {
      st[static_cast<std::size_t>(cur)].link = 0;
    } else {
      const int q = st[static_cast<std::size_t>(p)].next[ch];
      if (st[static_cast<std::size_t>(p)].len + 1 == st[static_cast<std::size_t>(q)].len) {
        st[static_cast<std::size_t>(cur)].link = q;
      } else {
        const int clone = static_cast<int>(st.size());
        State copy = st[static_cast<std::size_t>(q)];
        copy.len = st[static_cast<std::size_t>(p)].len + 1;
        st.push_back(copy);
        while (p != -1 && st[static_cast<std::size_t>(p)].next[ch] == q) {
          st[static_cast<std::size_t>(p)].next[ch] = clone;
          p = st[static_cast<std::size_t>(p)].link;
        }
        st[static_cast<std::size_t>(q)].link = clone;
        st[static_cast<std::size_t>(cur)].link = clone;
      }
    }
    last = cur;
  }
  int best = -1;
  for (const State& v : st) {
    if (v.next[0] != -1 && v.next[1] != -1 && v.len > best) best = v.len;
  }
  return best + 1;
}

inline BitSeq period_prefix(const BitSeq& s) {
  const int p = least_period(s);
  return BitSeq::from_word(s.word() >> (s.size() - p), p);
}

}  // namespace detail

/// Nonlinear complexity of the finite sequence s (reference scan).
inline int nlc_finite(const BitSeq& s, OpCounter* ops = nullptr) {
  const auto sym = detail::symbols_of(s);
  return detail::nlc_scan(sym, ops);
}

/// Same contract as nlc_finite, via a suffix automaton.
inline int nlc_finite_fast(const BitSeq& s) {
  const auto sym = detail::symbols_of(s);
  return detail::nlc_automaton(sym);
}

/// Nonlinear complexity of the periodic sequence s^inf, computed on one
/// doubled least period.
inline int nlc_periodic(const BitSeq& s, OpCounter* ops = nullptr) {
  const BitSeq base = detail::period_prefix(s);
  const auto sym = detail::symbols_of(base, 2);
  return detail::nlc_scan(sym, ops);
}

inline int nlc_periodic_fast(const BitSeq& s) {
  const BitSeq base = detail::period_prefix(s);
  const auto sym = detail::symbols_of(base, 2);
  return detail::nlc_automaton(sym);
}

/// Two order-`order` states of s^inf at start and start+spacing that agree
/// on their first order-1 symbols and differ in the last.
struct CompanionPair {
  int start = 0;
  int spacing = 0;
  int order = 0;

  friend bool operator==(const CompanionPair&, const CompanionPair&) = default;
};

/// Every companion pair of order nlc_periodic(s), spacing normalised to
/// d <= floor(n/2). Pairs with d == n/2 are reported once, from the smaller
/// start.
inline std::vector<CompanionPair> find_companion_pairs(const BitSeq& s) {
  const int n = s.size();
  if (!is_aperiodic(s)) {
    throw std::invalid_argument("companion pairs need an aperiodic sequence");
  }
  const int omega = nlc_periodic(s);
  std::vector<CompanionPair> pairs;
  if (omega < 1) return pairs;
  for (int d = 1; d <= n / 2; ++d) {
    for (int i = 0; i < n; ++i) {
      if (2 * d == n && i >= d) continue;
      bool prefix_equal = true;
      for (int j = 0; j + 1 < omega; ++j) {
        if (s.cyclic(i + j) != s.cyclic(i + d + j)) {
          prefix_equal = false;
          break;
        }
      }
      if (prefix_equal && s.cyclic(i + omega - 1) != s.cyclic(i + d + omega - 1)) {
        pairs.push_back({i, d, omega});
      }
    }
  }
  return pairs;
}

}  // namespace nlcgen

#endif  // NLCGEN_COMPLEXITY_HPP
