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

#ifndef NLCGEN_SHIFT_PROFILE_HPP
#define NLCGEN_SHIFT_PROFILE_HPP

#include <vector>

#include "nlcgen/bitseq.hpp"
#include "nlcgen/complexity.hpp"
#include "nlcgen/structure.hpp"

namespace nlcgen {

enum class Direction { left, right };

struct ProfileMembership {
  BForm form;
  int add = 0;
};

/// nlc of every rotation of s, with the B-forms each rotation admits.
struct ShiftProfile {
  Direction direction = Direction::left;
  std::vector<int> values;
  std::vector<std::vector<ProfileMembership>> memberships;  // empty when not in any B(n,.)
};

inline ShiftProfile shift_profile(const BitSeq& s, Direction dir) {
  ShiftProfile p;
  p.direction = dir;
  const int n = s.size();
  p.values.reserve(static_cast<std::size_t>(n));
  p.memberships.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const BitSeq rot = dir == Direction::left ? rotate_left(s, k) : rotate_right(s, k);
    p.values.push_back(nlc_finite(rot));
    for (const BForm& f : decompose(rot)) {
      p.memberships[static_cast<std::size_t>(k)].push_back(
          {f, detail::add_count_word(rot.word(), n, f.d)});
    }
  }
  return p;
}

}  // namespace nlcgen

#endif  // NLCGEN_SHIFT_PROFILE_HPP
