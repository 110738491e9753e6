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

#ifndef NLCGEN_SHIFT_CLASS_HPP
#define NLCGEN_SHIFT_CLASS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlcgen/bitseq.hpp"
#include "nlcgen/op_counter.hpp"
#include "nlcgen/structure.hpp"

namespace nlcgen {

/// Rotation class of an n-periodic sequence, identified by its least
/// rotation.
struct ShiftClass {
  BitSeq canonical;
  int omega = 0;
  BitSeq witness;              // generating member (S-set or representative)
  std::optional<BForm> form;   // witness's structured form, when it has one
  int add = 0;

  /// Number of distinct rotations (the least period of the class).
  int orbit_size() const { return least_period(canonical); }

  friend bool operator==(const ShiftClass& a, const ShiftClass& b) {
    return a.canonical == b.canonical && a.omega == b.omega;
  }
};

/// Refuse enumerations above this many candidates.
inline constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 34;

struct GenOptions {
  unsigned workers = 1;
  OpCounter* ops = nullptr;
};

/// Smallest m with 2^m >= n.
inline int ceil_log2(int n) {
  int m = 0;
  while ((1LL << m) < n) ++m;
  return m;
}

/// Deduplicates by canonical rotation, keeping the least witness per class,
/// and returns classes sorted by canonical pattern.
inline std::vector<ShiftClass> to_classes(std::vector<ShiftClass> items) {
  std::sort(items.begin(), items.end(), [](const ShiftClass& a, const ShiftClass& b) {
    if (a.canonical != b.canonical) return a.canonical < b.canonical;
    return a.witness < b.witness;
  });
  items.erase(std::unique(items.begin(), items.end(),
                          [](const ShiftClass& a, const ShiftClass& b) {
                            return a.canonical == b.canonical;
                          }),
              items.end());
  return items;
}

/// Canonical patterns of a class list, for set comparisons.
inline std::vector<BitSeq> canonical_set(const std::vector<ShiftClass>& classes) {
  std::vector<BitSeq> out;
  out.reserve(classes.size());
  for (const auto& k : classes) out.push_back(k.canonical);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every rotation of every class member, sorted.
inline std::vector<BitSeq> expand_classes(const std::vector<ShiftClass>& classes) {
  std::vector<BitSeq> out;
  for (const auto& k : classes) {
    for (int i = 0; i < k.orbit_size(); ++i) out.push_back(rotate_left(k.canonical, i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nlcgen

#endif  // NLCGEN_SHIFT_CLASS_HPP
