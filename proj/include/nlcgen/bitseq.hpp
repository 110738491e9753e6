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
// Bit-packed binary sequence value type with rotation, periodicity and run
// helpers.

#ifndef NLCGEN_BITSEQ_HPP
#define NLCGEN_BITSEQ_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nlcgen {

using word_t = std::uint64_t;

/// Longest sequence a BitSeq can hold (one machine word).
inline constexpr int kMaxLength = 64;

/// Raised by BitSeq::from_bits on malformed text.
class parse_error : public std::invalid_argument {
 public:
  enum class Kind { empty, too_long, bad_char };

  parse_error(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

namespace detail {

inline constexpr word_t low_mask(int n) noexcept {
  return n >= 64 ? ~word_t{0} : ((word_t{1} << n) - 1);
}

// Words store s_0 in the most significant of the n low bits, so numeric
// order on equal-length words is lexicographic order on the sequences.
inline constexpr word_t rotl(word_t w, int k, int n) noexcept {
  if (k == 0) return w;
  return ((w << k) | (w >> (n - k))) & low_mask(n);
}

inline constexpr int bit_at(word_t w, int i, int n) noexcept {
  return static_cast<int>((w >> (n - 1 - i)) & 1u);
}

inline constexpr int mod(long long a, long long m) noexcept {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// Least p dividing n with w equal to its p-prefix repeated.
inline constexpr int least_period(word_t w, int n) noexcept {
  for (int p = 1; p < n; ++p) {
    if (n % p == 0 && rotl(w, p, n) == w) return p;
  }
  return n;
}

inline constexpr word_t min_rotation(word_t w, int n) noexcept {
  word_t best = w;
  for (int k = 1; k < n; ++k) {
    const word_t r = rotl(w, k, n);
    if (r < best) best = r;
  }
  return best;
}

}  // namespace detail

/// Cyclic run-length statistics over one period.
struct RunHistogram {
  std::map<int, int> zero_runs;  // length -> count
  std::map<int, int> one_runs;

  int mass() const {
    int total = 0;
    for (auto [len, cnt] : zero_runs) total += len * cnt;
    for (auto [len, cnt] : one_runs) total += len * cnt;
    return total;
  }

  friend bool operator==(const RunHistogram&, const RunHistogram&) = default;
};

/// Immutable binary sequence s_0..s_{n-1}, 1 <= n <= kMaxLength.
class BitSeq {
 public:
  BitSeq() = default;

  /// Sequence from a packed word; s_0 is bit n-1 of `bits`.
  static BitSeq from_word(word_t bits, int n) {
    if (n < 1 || n > kMaxLength) {
      throw std::invalid_argument("BitSeq length out of range: " +
                                  std::to_string(n));
    }
    return BitSeq(bits & detail::low_mask(n), n);
  }

  static BitSeq from_bits(std::string_view text) {
    if (text.empty()) {
      throw parse_error(parse_error::Kind::empty, "empty bit string");
    }
    if (text.size() > static_cast<std::size_t>(kMaxLength)) {
      throw parse_error(parse_error::Kind::too_long,
                        "bit string longer than " +
                            std::to_string(kMaxLength) + " symbols");
    }
    word_t w = 0;
    for (char ch : text) {
      if (ch != '0' && ch != '1') {
        throw parse_error(parse_error::Kind::bad_char,
                          std::string("foreign character '") + ch +
                              "' in bit string");
      }
      w = (w << 1) | static_cast<word_t>(ch - '0');
    }
    return BitSeq(w, static_cast<int>(text.size()));
  }

  static BitSeq zeros(int n) { return from_word(0, n); }

  int size() const noexcept { return n_; }
  word_t word() const noexcept { return bits_; }

  /// Checked access; out-of-range indices throw.
  int operator[](int i) const {
    if (i < 0 || i >= n_) {
      throw std::out_of_range("BitSeq index " + std::to_string(i) +
                              " outside [0, " + std::to_string(n_) + ")");
    }
    return detail::bit_at(bits_, i, n_);
  }

  /// Periodic access: index reduced mod n.
  int cyclic(long long i) const noexcept {
    return detail::bit_at(bits_, detail::mod(i, n_), n_);
  }

  std::string to_string() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i) {
      if (detail::bit_at(bits_, i, n_)) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
  }

  /// Lexicographic on equal lengths; shorter sequences sort first.
  friend auto operator<=>(const BitSeq& a, const BitSeq& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }
  friend bool operator==(const BitSeq&, const BitSeq&) = default;

 private:
  BitSeq(word_t bits, int n) : bits_(bits), n_(n) {}

  word_t bits_ = 0;
  int n_ = 1;
};

/// L^k: result r_i = s_{(i+k) mod n}.
inline BitSeq rotate_left(const BitSeq& s, long long k) {
  const int n = s.size();
  return BitSeq::from_word(detail::rotl(s.word(), detail::mod(k, n), n), n);
}

/// R^k = L^{n-k}.
inline BitSeq rotate_right(const BitSeq& s, long long k) {
  return rotate_left(s, -k);
}

inline int least_period(const BitSeq& s) {
  return detail::least_period(s.word(), s.size());
}

/// True iff s is not a repetition of a proper-divisor-length block.
inline bool is_aperiodic(const BitSeq& s) { return least_period(s) == s.size(); }

inline int hamming_weight(const BitSeq& s) noexcept {
  return std::popcount(s.word());
}

struct CanonicalForm {
  BitSeq seq;
  int shift = 0;  // rotate_left(s, shift) == seq
};

/// Lexicographically least rotation, with the least shift reaching it.
inline CanonicalForm canonical_rotation(const BitSeq& s) {
  const int n = s.size();
  word_t best = s.word();
  int best_k = 0;
  for (int k = 1; k < n; ++k) {
    const word_t r = detail::rotl(s.word(), k, n);
    if (r < best) {
      best = r;
      best_k = k;
    }
  }
  return {BitSeq::from_word(best, n), best_k};
}

/// Maximal runs of each symbol over one period, counted cyclically.
inline RunHistogram cyclic_runs(const BitSeq& s) {
  const int n = s.size();
  const int w = hamming_weight(s);
  if (w == 0 || w == n) {
    throw std::invalid_argument("no runs defined for a constant sequence");
  }
  // Start at a symbol change so no run straddles the scan origin.
  int start = 0;
  while (s.cyclic(start - 1) == s[start]) ++start;

  RunHistogram h;
  int i = 0;
  while (i < n) {
    const int sym = s.cyclic(start + i);
    int len = 0;
    while (i < n && s.cyclic(start + i) == sym) {
      ++len;
      ++i;
    }
    ++(sym ? h.one_runs : h.zero_runs)[len];
  }
  return h;
}

}  // namespace nlcgen

#endif  // NLCGEN_BITSEQ_HPP
