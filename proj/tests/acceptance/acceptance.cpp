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
// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nlcgen/nlcgen.hpp"
#include "nlcgen/report.hpp"

namespace {

using namespace nlcgen;

struct Failure {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

BitSeq B(const char* s) { return BitSeq::from_bits(s); }

std::vector<BitSeq> sorted(std::vector<BitSeq> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<BitSeq> seqs(std::initializer_list<const char*> bits) {
  std::vector<BitSeq> v;
  for (const char* b : bits) v.push_back(B(b));
  return sorted(std::move(v));
}

std::vector<BitSeq> canon(const std::vector<BitSeq>& v) {
  std::set<BitSeq> out;
  for (const auto& s : v) out.insert(canonical_rotation(s).seq);
  return {out.begin(), out.end()};
}

std::vector<BitSeq> reps_with_add(const GenRResult& r, int add) {
  std::vector<BitSeq> out;
  for (const auto& e : r.reps) {
    if (e.add == add) out.push_back(e.seq);
  }
  return sorted(std::move(out));
}

// 1: representatives and classes at n = 8.
void period_eight_blocks() {
  const auto r = gen_R(8);
  const std::map<int, std::vector<BitSeq>> listed{
      {1, seqs({"00001010", "11110101", "00001110", "11110001", "10101100", "01010011",
                "11011000", "00100111"})},
      {2, seqs({"10010000", "01010001", "10101110", "01101111", "00001100", "11110011"})},
      {3, seqs({"00001000", "01001010", "10110101", "11110111"})},
  };
  expect(reps_with_add(r, 0).size() == 10, "add-0 block size");
  for (const auto& [add, want] : listed) {
    expect(reps_with_add(r, add) == want, "add-" + std::to_string(add) + " representatives");
    expect(canonical_set(gen_P_large(8, 4 + add)) == canon(want),
           "classes at omega=" + std::to_string(4 + add));
  }
  for (int omega = 4; omega <= 7; ++omega) {
    expect(canonical_set(gen_P_large(8, omega)) == canonical_set(oracle_P(8, omega)),
           "gen_P_large(8," + std::to_string(omega) + ") vs exhaustive");
  }
}

// 2: n = 7, omega = 3.
void period_seven_example() {
  expect(gen_B0(7, 3).size() == 18, "|B0(7,3)| = 18");
  const auto s = gen_S_small(7, 3);
  expect(s == seqs({"0001101", "0110100", "1010001", "0001011", "0101100", "1011000",
                    "1110100", "1010011", "0100111", "1110010", "1001011", "0101110"}),
         "S(7,3) members");
  std::set<BitSeq> closure;
  for (const auto& x : s) {
    for (int k = 0; k < 7; ++k) closure.insert(rotate_left(x, k));
  }
  const auto r = gen_small(7, 3);
  const auto expanded = expand_classes(r.classes);
  expect(r.classes.size() == 4, "4 classes");
  expect(expanded.size() == 28, "28 sequences");
  expect(std::vector<BitSeq>(closure.begin(), closure.end()) == sorted(expanded),
         "expansion equals rotation closure");
  expect(canonical_set(r.classes) == canonical_set(oracle_P(7, 3)), "P(7,3) vs exhaustive");
}

// 3: de Bruijn counts for m = 4 and 5.
void de_bruijn_counts() {
  const GenOptions opt{default_workers(), nullptr};
  const std::map<int, std::pair<std::size_t, std::size_t>> want{{4, {36, 16}}, {5, {88200, 2048}}};
  for (const auto& [m, counts] : want) {
    const auto tilde = gen_B0_tilde(m, opt);
    expect(tilde.size() == counts.first, "|B0~(" + std::to_string(m) + ")|");
    for (const auto& s : tilde) expect(check_run_properties(s, m), "run property");
    const auto db = gen_debruijn(m, opt);
    expect(db.size() == counts.second, "de Bruijn classes m=" + std::to_string(m));
    for (const auto& k : db) {
      expect(is_de_bruijn(k.canonical, m), "window test " + k.canonical.to_string());
      expect(check_run_properties(k.canonical, m), "runs " + k.canonical.to_string());
    }
  }
}

// 4: rotation profiles.
void worked_profiles() {
  const BitSeq a = B("0010010010");
  expect(nlc_periodic(a) == 9, "periodic nlc 9");
  expect(shift_profile(a, Direction::left).values == std::vector<int>{2, 2, 7, 6, 5, 4, 6, 5, 4, 3},
         "left profile");
  const BitSeq b = B("000010010");
  expect(shift_profile(b, Direction::right).values == std::vector<int>{4, 5, 5, 5, 5, 4, 5, 6, 3},
         "right profile");
  std::set<int> shifts;
  for (const auto& e : equivalence_set(b, 4)) shifts.insert(e.shift);
  expect(shifts == std::set<int>{0, 5}, "E-set {0,5}");
  expect(representative(b, 4).add == 2, "representative add 2");
}

// 5: property sweeps against exhaustive search.
void sweeps() {
  OracleOptions oo;
  oo.workers = default_workers();
  for (int n = 3; n <= 14; ++n) {
    for (int c = std::max(1, ceil_log2(n)); c <= n / 2 + 1 && c < n; ++c) {
      expect(verify_theorem1(n, c, oo), "closure n=" + std::to_string(n) + " c=" + std::to_string(c));
    }
  }
  for (int n = 4; n <= 16; ++n) {
    const auto r = verify_theorem2(n);
    expect(r.ok(), "c+add identity n=" + std::to_string(n) +
                       (r.violations.empty() ? "" : ": " + r.violations.front()));
  }
  for (int n = 4; n <= 14; ++n) {
    expect(verify_generation(n, oo).ok(), "generation n=" + std::to_string(n));
  }
  for (int n = 4; n <= 14; ++n) {
    const int c = (n + 1) / 2;
    for (const auto& s : gen_B(n, c)) {
      for (const auto& f : decompose(s)) {
        if (f.c != c) continue;
        const auto law = check_shift_laws(s, f);
        expect(law.ok, "shift laws: " + law.counterexample);
      }
    }
  }
}

// 6: candidate relations for n = 12, prefix 01010100.
void candidate_walkthrough() {
  struct Row {
    int dp, r1, r2, add, h;
    const char* partner;
  };
  const word_t head = detail::structured_prefix(0b01, 2, 6);
  for (const Row& row : std::vector<Row>{{1, 6, 12, 1, 5, "000000101010"},
                                         {3, 4, 10, 1, 7, "100100101010"},
                                         {4, 4, 11, 2, 6, "000100010101"},
                                         {5, 2, 12, 5, 5, "010100101010"},
                                         {6, 2, 7, 0, 10, "010100010101"}}) {
    const BitSeq s = BitSeq::from_word(detail::fill_tail(head, 8, 12, row.dp), 12);
    bool hit = false;
    for (const auto& k : equiv_candidates(s, BForm::make(6, 2))) {
      expect(k.d_prime != 2, "spacing 2 must be rejected");
      if (k.d_prime != row.dp) continue;
      hit = true;
      expect(k.r1 == row.r1 && k.r2 == row.r2 && k.delta == row.add && k.h == row.h &&
                 k.partner == B(row.partner),
             "row d'=" + std::to_string(row.dp));
    }
    expect(hit, "missing row d'=" + std::to_string(row.dp));
  }
}

// 7: largest rotated nlc of high-add representatives.
void rotated_maximum_scan() {
  const auto r = scan_open_problem(16);
  expect(r.lower_bound_failures.empty(), "max >= n-d violated");
  std::cout << "  scanned " << r.scanned << " representatives\n";
  for (const auto& f : r.findings) {
    std::cout << "  finding " << f.seq.to_string() << " n=" << f.n << " c=" << f.c << " d=" << f.d
              << " t=" << f.t << " max=" << f.max_nlc << " n-d=" << f.n - f.d
              << (f.tied_alternative ? " (a tied maximiser of this class is consistent)" : "")
              << '\n';
  }
  expect(r.findings.empty(), std::to_string(r.findings.size()) + " findings");
}

// 8: operation counts at n = 22, omega = 11.
void operation_counts() {
  const auto g = generate(22, 11, Method::automatic, default_workers());
  const auto o = generate(22, 11, Method::oracle, default_workers());
  expect(canonical_set(g.classes) == canonical_set(o.classes), "generator disagrees with oracle");
  const double ratio = static_cast<double>(o.operation_counter) /
                       static_cast<double>(std::max<std::uint64_t>(1, g.operation_counter));
  std::cout << "  generator_ops=" << g.operation_counter << " oracle_ops=" << o.operation_counter
            << " ratio=" << ratio << '\n';
  expect(ratio >= 100.0, "ratio below 100");
}

// 9: both finite-nlc engines agree.
void engine_equivalence() {
  for (int n = 1; n <= 16; ++n) {
    for (word_t w = 0; w < (word_t{1} << n); ++w) {
      const BitSeq s = BitSeq::from_word(w, n);
      expect(nlc_finite(s) == nlc_finite_fast(s), "mismatch on " + s.to_string());
    }
  }
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<int> len(1, 64);
  for (int i = 0; i < 100000; ++i) {
    const int n = len(rng);
    const BitSeq s = BitSeq::from_word(rng(), n);
    expect(nlc_finite(s) == nlc_finite_fast(s), "mismatch on " + s.to_string());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria{
      {"1 period-8 representatives and classes", period_eight_blocks},
      {"2 period-7 small-complexity example", period_seven_example},
      {"3 de Bruijn counts m=4,5", de_bruijn_counts},
      {"4 rotation profiles", worked_profiles},
      {"5 property sweeps vs exhaustive search", sweeps},
      {"6 candidate relations n=12", candidate_walkthrough},
      {"7 rotated maximum scan n<=16", rotated_maximum_scan},
      {"8 operation counts n=22 omega=11", operation_counts},
      {"9 engine equivalence", engine_equivalence},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      fn();
    } catch (const Failure& f) {
      why = f.what;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", secs);
    if (why.empty()) {
      std::cout << "PASS C" << name << " (" << buf << " s)" << std::endl;
    } else {
      ++failed;
      std::cout << "FAIL C" << name << " (" << buf << " s): " << why << std::endl;
    }
  }
  return failed == 0 ? 0 : 1;
}
