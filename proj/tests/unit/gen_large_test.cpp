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

#include <map>
#include <set>

#include "nlcgen/complexity.hpp"
#include "nlcgen/gen_large.hpp"
#include "nlcgen/oracle.hpp"
#include "nlcgen/structure.hpp"
#include "test_util.hpp"

namespace nlcgen {
namespace {

using testing::B;

struct CandidateRow {
  int d_prime;
  int r1;
  int r2;
  int add;
  int h;
  const char* partner;
  bool delete_s;
};

// n = 12, c = 6, d = 2, prefix 01010100.
TEST(EquivCandidates, PeriodTwelveWalkthrough) {
  const int n = 12;
  const word_t head = detail::structured_prefix(0b01, 2, 6);
  ASSERT_EQ(BitSeq::from_word(head, 8), B("01010100"));
  const std::vector<CandidateRow> rows = {
      {1, 6, 12, 1, 5, "000000101010", true},  {3, 4, 10, 1, 7, "100100101010", false},
      {4, 4, 11, 2, 6, "000100010101", true},  {5, 2, 12, 5, 5, "010100101010", true},
      {6, 2, 7, 0, 10, "010100010101", false},
  };
  for (const auto& row : rows) {
    const BitSeq s = BitSeq::from_word(detail::fill_tail(head, 8, n, row.d_prime), n);
    const auto cands = equiv_candidates(s, BForm::make(6, 2));
    const EquivCandidate* hit = nullptr;
    for (const auto& k : cands) {
      if (k.d_prime == row.d_prime) hit = &k;
    }
    ASSERT_NE(hit, nullptr) << "d'=" << row.d_prime;
    EXPECT_EQ(hit->r1, row.r1) << "d'=" << row.d_prime;
    EXPECT_EQ(hit->r2, row.r2) << "d'=" << row.d_prime;
    EXPECT_EQ(hit->delta, row.add) << "d'=" << row.d_prime;
    EXPECT_EQ(hit->h, row.h) << "d'=" << row.d_prime;
    EXPECT_EQ(hit->partner, B(row.partner)) << "d'=" << row.d_prime;
    EXPECT_TRUE(hit->in_window);
    EXPECT_EQ(add_count(s, BForm::make(6, 2)) < hit->delta, row.delete_s) << "d'=" << row.d_prime;
  }
  // The last two prefix symbols are 00, so spacing 2 never qualifies.
  for (int dp = 1; dp <= 6; ++dp) {
    const BitSeq s = BitSeq::from_word(detail::fill_tail(head, 8, n, dp), n);
    for (const auto& k : equiv_candidates(s, BForm::make(6, 2))) EXPECT_NE(k.d_prime, 2);
  }
  EXPECT_EQ(BitSeq::from_word(detail::fill_tail(head, 8, n, 3), n), B("010101001001"));
}

TEST(EquivCandidates, PartnersAreMembersWithPredictedAdd) {
  for (int n = 4; n <= 16; ++n) {
    const int c = (n + 1) / 2;
    for (const BitSeq& s : gen_B(n, c)) {
      for (const BForm& f : decompose(s)) {
        if (f.c != c) continue;
        for (const auto& k : equiv_candidates(s, f)) {
          const BForm pf = BForm::make(c, k.d_prime);
          ASSERT_TRUE(has_form(k.partner, pf)) << s.to_string() << " d'=" << k.d_prime;
          ASSERT_EQ(add_count(k.partner, pf), k.delta) << s.to_string();
          ASSERT_EQ(rotate_right(s, k.h), k.partner);
        }
      }
    }
  }
}

TEST(EquivCandidates, RejectsWrongComplexity) {
  EXPECT_THROW(equiv_candidates(B("000010010"), BForm::make(4, 1)), std::invalid_argument);
}

std::vector<BitSeq> reps_with_add(const GenRResult& r, int add) {
  std::vector<BitSeq> out;
  for (const auto& e : r.reps) {
    if (e.add == add) out.push_back(e.seq);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(GenR, PeriodEightBlocks) {
  const auto r = gen_R(8);
  EXPECT_EQ(r.c, 4);
  EXPECT_EQ(r.reps.size(), 28u);
  EXPECT_EQ(reps_with_add(r, 0).size(), 10u);
  EXPECT_EQ(reps_with_add(r, 1),
            testing::seqs({"00001010", "11110101", "00001110", "11110001", "10101100",
                           "01010011", "11011000", "00100111"}));
  EXPECT_EQ(reps_with_add(r, 2), testing::seqs({"10010000", "01010001", "10101110", "01101111",
                                                "00001100", "11110011"}));
  EXPECT_EQ(reps_with_add(r, 3),
            testing::seqs({"00001000", "01001010", "10110101", "11110111"}));
  const auto add2 = reps_with_add(r, 2);
  EXPECT_FALSE(std::binary_search(add2.begin(), add2.end(), B("00001001")));
}

TEST(GenR, MatchesBruteForceRepresentatives) {
  for (int n = 4; n <= 16; ++n) {
    const auto r = gen_R(n);
    EXPECT_EQ(r.stats.window_violations, 0u) << n;
    EXPECT_EQ(r.stats.lower_add_survivors, 0u) << n;
    std::map<BitSeq, int> want;
    std::set<std::pair<BitSeq, int>> maximal;
    for (const auto& top : brute_representatives(n, r.c)) {
      want[canonical_rotation(top.front().seq).seq] = top.front().add;
      for (const auto& e : top) maximal.insert({e.seq, e.add});
    }
    std::map<BitSeq, int> got;
    for (const auto& e : r.reps) {
      const BitSeq key = canonical_rotation(e.seq).seq;
      ASSERT_EQ(got.count(key), 0u) << "two representatives for " << key.to_string();
      got[key] = e.add;
      EXPECT_TRUE(maximal.count({e.seq, e.add})) << e.seq.to_string();
      EXPECT_EQ(add_count(e.seq, e.form), e.add);
    }
    EXPECT_EQ(got, want) << n;
  }
}

TEST(GenPLarge, PeriodEightBlocks) {
  std::vector<BitSeq> add2;
  for (const char* s :
       {"10010000", "01010001", "10101110", "01101111", "00001100", "11110011"}) {
    add2.push_back(canonical_rotation(B(s)).seq);
  }
  std::sort(add2.begin(), add2.end());
  EXPECT_EQ(canonical_set(gen_P_large(8, 6)), add2);
  EXPECT_EQ(gen_P_large(8, 7).size(), 4u);
  for (int omega = 4; omega <= 7; ++omega) {
    for (const auto& k : gen_P_large(8, omega)) EXPECT_EQ(nlc_periodic(k.canonical), omega);
  }
}

TEST(GenPLarge, TopComplexityHasRepeatedBlockForm) {
  // Some companion pair, read from its first window, starts a d-periodic word.
  for (int n = 4; n <= 16; ++n) {
    for (const auto& k : gen_P_large(n, n - 1)) {
      bool found = false;
      for (const auto& p : find_companion_pairs(k.canonical)) {
        for (auto [start, d] : {std::pair{p.start, p.spacing},
                                std::pair{p.start + p.spacing, n - p.spacing}}) {
          const BitSeq b = rotate_left(k.canonical, start % n);
          bool ok = true;
          for (int i = 0; i + d < n && ok; ++i) ok = b[i] == b[i + d];
          found = found || ok;
        }
      }
      EXPECT_TRUE(found) << k.canonical.to_string();
    }
  }
}

TEST(GenPLarge, PartitionOfRotationClosure) {
  for (int n = 4; n <= 14; ++n) {
    const int c = (n + 1) / 2;
    std::vector<BitSeq> all;
    for (int omega = c; omega <= n - 1; ++omega) {
      for (const auto& s : canonical_set(gen_P_large(n, omega))) all.push_back(s);
    }
    std::sort(all.begin(), all.end());
    EXPECT_TRUE(std::adjacent_find(all.begin(), all.end()) == all.end()) << n;
    std::set<BitSeq> closure;
    for (const auto& s : gen_B(n, c)) closure.insert(canonical_rotation(s).seq);
    EXPECT_EQ(all, std::vector<BitSeq>(closure.begin(), closure.end())) << n;
  }
}

TEST(GenPLarge, RangeErrors) {
  EXPECT_THROW(gen_P_large(8, 3), std::out_of_range);
  EXPECT_THROW(gen_P_large(8, 8), std::out_of_range);
  EXPECT_THROW(gen_R(3), std::out_of_range);
}

TEST(GenPLarge, SmallAndLargeAgreeAtHalf) {
  for (int n = 4; n <= 16; n += 2) {
    EXPECT_EQ(canonical_set(gen_P_large(n, n / 2)), canonical_set(gen_P_small(n, n / 2))) << n;
  }
}

}  // namespace
}  // namespace nlcgen
