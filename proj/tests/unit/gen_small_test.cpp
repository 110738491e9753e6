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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "nlcgen/complexity.hpp"
#include "nlcgen/gen_small.hpp"
#include "nlcgen/structure.hpp"
#include "test_util.hpp"

namespace nlcgen {
namespace {

using testing::B;

std::vector<BitSeq> brute_B(int n, int c, bool zero_add) {
  std::vector<BitSeq> out;
  for (word_t w = 0; w < (word_t{1} << n); ++w) {
    const BitSeq s = BitSeq::from_word(w, n);
    for (const BForm& f : decompose(s)) {
      if (f.c == c && (!zero_add || add_count(s, f) == 0)) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

TEST(GenB, SizeAtPeriodEight) {
  // 48 sequences in 28 classes.
  EXPECT_EQ(gen_B(8, 4).size(), 48u);
  std::set<BitSeq> classes;
  for (const auto& s : gen_B(8, 4)) classes.insert(canonical_rotation(s).seq);
  EXPECT_EQ(classes.size(), 28u);
}

TEST(GenB, MatchesBruteForceUpTo12) {
  for (int n = 2; n <= 12; ++n) {
    for (int c = 1; c < n; ++c) {
      ASSERT_EQ(gen_B(n, c), brute_B(n, c, false)) << n << "," << c;
    }
  }
}

TEST(GenB0, WorkedExampleAndBruteForce) {
  EXPECT_EQ(gen_B0(7, 3).size(), 18u);
  for (int n = 2; n <= 12; ++n) {
    for (int c = 1; c < n; ++c) {
      ASSERT_EQ(gen_B0(n, c), brute_B(n, c, true)) << n << "," << c;
    }
  }
}

TEST(GenB, RangeErrors) {
  EXPECT_THROW(gen_B(8, 0), std::out_of_range);
  EXPECT_THROW(gen_B(8, 8), std::out_of_range);
  EXPECT_THROW(gen_B(65, 3), std::out_of_range);
}

TEST(GenS, WorkedExample) {
  EXPECT_EQ(gen_S_small(7, 3),
            testing::seqs({"0001101", "0110100", "1010001", "0001011", "0101100", "1011000",
                           "1110100", "1010011", "0100111", "1110010", "1001011", "0101110"}));
}

TEST(GenS, MembersHaveRequestedComplexity) {
  for (int n = 4; n <= 16; ++n) {
    for (int omega = ceil_log2(n); omega <= n / 2; ++omega) {
      for (const BitSeq& s : gen_S_small(n, omega)) {
        ASSERT_EQ(nlc_periodic(s), omega) << s.to_string();
      }
    }
  }
}

TEST(GenS, RangeGate) {
  EXPECT_TRUE(gen_S_small(3, 1).empty());
  EXPECT_TRUE(gen_S_small(16, 3).empty());
  EXPECT_THROW(gen_S_small(8, 5), std::out_of_range);
  EXPECT_THROW(gen_S_small(8, 0), std::out_of_range);
}

TEST(GenP, WorkedExampleOrbits) {
  const auto classes = gen_P_small(7, 3);
  ASSERT_EQ(classes.size(), 4u);
  EXPECT_EQ(expand_classes(classes).size(), 28u);
  std::set<BitSeq> from_s;
  for (const auto& s : gen_S_small(7, 3)) from_s.insert(canonical_rotation(s).seq);
  EXPECT_EQ(canonical_set(classes), std::vector<BitSeq>(from_s.begin(), from_s.end()));
  for (const auto& k : classes) {
    EXPECT_EQ(k.omega, 3);
    EXPECT_EQ(k.orbit_size(), 7);
    EXPECT_EQ(nlc_periodic(k.canonical), 3);
    ASSERT_TRUE(k.form.has_value());
    EXPECT_EQ(k.form->c, 3);
    EXPECT_EQ(canonical_rotation(k.witness).seq, k.canonical);
  }
}

TEST(GenP, PeriodEightAddZeroBlock) {
  const auto classes = gen_P_small(8, 4);
  EXPECT_EQ(classes.size(), 10u);
  const auto canon = canonical_set(classes);
  for (const char* s : {"10011000", "00100011"}) {
    EXPECT_TRUE(std::binary_search(canon.begin(), canon.end(), canonical_rotation(B(s)).seq)) << s;
  }
}

TEST(GenP, DeterministicAcrossWorkerCounts) {
  const auto one = gen_small(16, 6, GenOptions{1, nullptr});
  const auto many = gen_small(16, 6, GenOptions{4, nullptr});
  EXPECT_EQ(one.s_set, many.s_set);
  EXPECT_EQ(canonical_set(one.classes), canonical_set(many.classes));
}

TEST(GenB, OperationCountWithinBound) {
  for (int n : {12, 16, 20}) {
    for (int c = 2; c < n / 2; ++c) {
      OpCounter ops;
      (void)gen_B(n, c, GenOptions{1, &ops});
      EXPECT_LE(ops.value(), static_cast<std::uint64_t>(n) << (n - c - 1)) << n << "," << c;
    }
  }
}

}  // namespace
}  // namespace nlcgen
