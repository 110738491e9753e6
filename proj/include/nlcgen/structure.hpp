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
// Structured prefixes, added terms and rotation-equivalence sets.
//
// A sequence s of length n lies in B(n,c,d) when it is aperiodic, its
// d-prefix is aperiodic, s_i = s_{i+d} for 0 <= i <= c-2 and
// s_{c-1} != s_{c+d-1}, with 1 <= d <= min(n-c, floor(n/2)). Equivalently
// its first c+d symbols are the d-prefix repeated q times followed by the
// first r symbols of it and one flipped symbol, where q = floor((c+d-1)/d)
// and r = (c+d-1) - q*d.

#ifndef NLCGEN_STRUCTURE_HPP
#define NLCGEN_STRUCTURE_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlcgen/bitseq.hpp"
#include "nlcgen/complexity.hpp"

namespace nlcgen {

/// Decomposition witness (c, d, q, r) for membership in B(n,c,d).
struct BForm {
  int c = 0;
  int d = 0;
  int q = 0;
  int r = 0;

  static BForm make(int c, int d) {
    const int q = (c + d - 1) / d;
    return {c, d, q, (c + d - 1) - q * d};
  }

  friend bool operator==(const BForm&, const BForm&) = default;
  friend auto operator<=>(const BForm&, const BForm&) = default;
};

namespace detail {

// First c+d symbols of a B(., c, d) sequence with d-prefix `prefix`,
// packed with s_0 as the most significant of c+d bits.
inline word_t structured_prefix(word_t prefix, int d, int c) {
  word_t w = 0;
  for (int i = 0; i + 1 < c + d; ++i) w = (w << 1) | ((prefix >> (d - 1 - i % d)) & 1u);
  const int last = (c + d - 1) % d;
  return (w << 1) | (((prefix >> (d - 1 - last)) & 1u) ^ 1u);
}

// Spacing-d form of the word, if any.
inline std::optional<BForm> form_for_spacing(word_t w, int n, int d) {
  if (d < 1 || 2 * d > n) return std::nullopt;
  if (least_period(w >> (n - d), d) != d) return std::nullopt;
  for (int i = 0; i + d < n; ++i) {
    if (bit_at(w, i, n) != bit_at(w, i + d, n)) {
      const int c = i + 1;
      if (d > n - c) return std::nullopt;
      return BForm::make(c, d);
    }
  }
  return std::nullopt;
}

inline int add_count_word(word_t w, int n, int d) {
  int t = 0;
  while (t < n && bit_at(w, n - 1 - t, n) == bit_at(w, mod(d - 1 - t, d), n)) ++t;
  return t;
}

// Membership in B(n,c) without materialising the set.
inline bool in_B_word(word_t w, int n, int c) {
  if (c < 1 || c >= n) return false;
  const int dmax = std::min(n - c, n / 2);
  bool aperiodic_checked = false;
  for (int d = 1; d <= dmax; ++d) {
    // Fast reject: the structured prefix must match for i < c-1.
    bool ok = true;
    for (int i = 0; i + 1 < c; ++i) {
      if (bit_at(w, i, n) != bit_at(w, i + d, n)) {
        ok = false;
        break;
      }
    }
    if (!ok || bit_at(w, c - 1, n) == bit_at(w, c + d - 1, n)) continue;
    if (least_period(w >> (n - d), d) != d) continue;
    if (!aperiodic_checked) {
      if (least_period(w, n) != n) return false;
      aperiodic_checked = true;
    }
    return true;
  }
  return false;
}

}  // namespace detail

/// Every (c, d) form of s, ordered by spacing. Empty for periodic s.
inline std::vector<BForm> decompose(const BitSeq& s) {
  std::vector<BForm> forms;
  if (!is_aperiodic(s)) return forms;
  for (int d = 1; 2 * d <= s.size(); ++d) {
    if (auto f = detail::form_for_spacing(s.word(), s.size(), d)) forms.push_back(*f);
  }
  return forms;
}

inline bool has_form(const BitSeq& s, const BForm& form) {
  const auto forms = decompose(s);
  return std::find(forms.begin(), forms.end(), form) != forms.end();
}

/// True iff s lies in B(n, c).
inline bool in_B(const BitSeq& s, int c) {
  return detail::in_B_word(s.word(), s.size(), c);
}

/// Number of added terms: the longest t with s_{n-1-i} = s_{(d-1-i) mod d}
/// for all i < t.
inline int add_count(const BitSeq& s, const BForm& form) {
  if (!has_form(s, form)) {
    throw std::invalid_argument("add_count: " + s.to_string() +
                                " has no form (c=" + std::to_string(form.c) +
                                ", d=" + std::to_string(form.d) + ")");
  }
  return detail::add_count_word(s.word(), s.size(), form.d);
}

struct EquivalenceEntry {
  int shift = 0;  // right-rotation amount k of R^k(s)
  BitSeq seq;
  BForm form;
  int add = 0;
};

/// Members of E(s): rotations R^k(s) lying in B(n, c), one entry per form.
inline std::vector<EquivalenceEntry> equivalence_set(const BitSeq& s, int c) {
  if (!in_B(s, c)) {
    throw std::invalid_argument("equivalence_set: " + s.to_string() +
                                " is not in B(n," + std::to_string(c) + ")");
  }
  std::vector<EquivalenceEntry> out;
  for (int k = 0; k < s.size(); ++k) {
    const BitSeq rot = rotate_right(s, k);
    for (const BForm& f : decompose(rot)) {
      if (f.c == c) {
        out.push_back({k, rot, f, detail::add_count_word(rot.word(), rot.size(), f.d)});
      }
    }
  }
  return out;
}

struct Representative {
  BitSeq seq;
  int shift = 0;
  BForm form;
  int add = 0;
};

/// Member of E(s) with the most added terms; ties go to the least rotation.
inline Representative representative(const BitSeq& s, int c) {
  const auto entries = equivalence_set(s, c);
  const EquivalenceEntry* best = &entries.front();
  for (const auto& e : entries) {
    if (e.add > best->add) best = &e;
  }
  return {best->seq, best->shift, best->form, best->add};
}

struct LawReport {
  bool ok = true;
  std::string counterexample;
};

/// Checks the left-shift closure and the right-shift growth laws for one
/// member s of B(n,c,d) with c >= floor(n/2).
inline LawReport check_shift_laws(const BitSeq& s, const BForm& form) {
  const int n = s.size();
  if (form.c < n / 2 || !has_form(s, form)) {
    throw std::invalid_argument("check_shift_laws: precondition violated for " +
                                s.to_string());
  }
  const int c = form.c;
  const int d = form.d;
  LawReport rep;
  auto fail = [&](const std::string& msg) {
    if (rep.ok) {
      rep.ok = false;
      rep.counterexample = msg;
    }
  };

  for (int t = 1; t < c; ++t) {
    const BitSeq left = rotate_left(s, t);
    if (!has_form(left, BForm::make(c - t, d))) {
      fail("L^" + std::to_string(t) + " left B(n,c-t,d)");
    } else if (c - t >= n / 2 && nlc_finite(left) != c - t) {
      fail("nlc(L^" + std::to_string(t) + ") != c-t");
    }
  }

  const int t = detail::add_count_word(s.word(), n, d);
  for (int k = 1; k <= n - c - d; ++k) {
    const int expect = k <= t ? c + k : c + t;
    const int got = nlc_finite(rotate_right(s, k));
    if (got != expect) {
      fail("nlc(R^" + std::to_string(k) + ")=" + std::to_string(got) +
           ", expected " + std::to_string(expect));
    }
  }
  return rep;
}

struct MaxRotatedNlc {
  int max_nlc = 0;
  int add = 0;
  bool beyond_window = false;  // t > n-c-d
  bool bound_holds = true;     // = c+t, or >= n-d when beyond_window
  bool equals_n_minus_d = false;
};

/// Max over k of nlc(R^k(s)) for a representative s of R(n,c,d).
inline MaxRotatedNlc max_rotated_nlc(const BitSeq& s, const BForm& form, int t) {
  const int n = s.size();
  if (form.c < n / 2 || !has_form(s, form) ||
      detail::add_count_word(s.word(), n, form.d) != t) {
    throw std::invalid_argument("max_rotated_nlc: precondition violated for " +
                                s.to_string());
  }
  for (const auto& e : equivalence_set(s, form.c)) {
    if (e.add > t) {
      throw std::invalid_argument("max_rotated_nlc: " + s.to_string() +
                                  " is not a representative");
    }
  }
  MaxRotatedNlc out;
  out.add = t;
  for (int k = 0; k < n; ++k) out.max_nlc = std::max(out.max_nlc, nlc_finite(rotate_right(s, k)));
  out.beyond_window = t > n - form.c - form.d;
  out.equals_n_minus_d = out.max_nlc == n - form.d;
  out.bound_holds = out.beyond_window ? out.max_nlc >= n - form.d
                                      : out.max_nlc == form.c + t;
  return out;
}

}  // namespace nlcgen

#endif  // NLCGEN_STRUCTURE_HPP
