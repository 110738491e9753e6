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
// Exhaustive ground truth over all 2^n words, plus the closure and identity checks
// built on it.

#ifndef NLCGEN_ORACLE_HPP
#define NLCGEN_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlcgen/bitseq.hpp"
#include "nlcgen/complexity.hpp"
#include "nlcgen/gen_large.hpp"
#include "nlcgen/gen_small.hpp"
#include "nlcgen/op_counter.hpp"
#include "nlcgen/shift_class.hpp"
#include "nlcgen/structure.hpp"

namespace nlcgen {

struct OracleOptions {
  int max_n = 24;
  unsigned workers = 1;
  OpCounter* ops = nullptr;
};

/// Every aperiodic necklace of length n, grouped by periodic complexity.
struct OracleCatalog {
  int n = 0;
  std::map<int, std::vector<ShiftClass>> classes;
  std::map<int, std::uint64_t> totals;  // periodic sequences per omega

  std::size_t class_count() const {
    std::size_t k = 0;
    for (const auto& [w, v] : classes) k += v.size();
    return k;
  }
};

namespace detail {

inline void oracle_guard(int n, const OracleOptions& opt) {
  if (n < 1 || n > opt.max_n || n > kMaxLength) {
    throw std::out_of_range("exhaustive search needs 1 <= n <= " + std::to_string(opt.max_n) +
                            " (got " + std::to_string(n) + ")");
  }
}

// Least rotation test with an early exit; counts rotations examined.
inline bool is_necklace(word_t w, int n, std::uint64_t& probes) {
  for (int k = 1; k < n; ++k) {
    ++probes;
    if (rotl(w, k, n) < w) return false;
  }
  return true;
}

inline int mobius(int k) {
  int result = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      k /= p;
      if (k % p == 0) return 0;
      result = -result;
    }
  }
  return k > 1 ? -result : result;
}

}  // namespace detail

/// Number of aperiodic binary necklaces (Lyndon words) of length n.
inline std::uint64_t lyndon_count(int n) {
  std::int64_t sum = 0;
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0) sum += detail::mobius(k) * (std::int64_t{1} << (n / k));
  }
  return static_cast<std::uint64_t>(sum / n);
}

inline OracleCatalog build_catalog(int n, const OracleOptions& opt = {}) {
  detail::oracle_guard(n, opt);
  const std::uint64_t total = std::uint64_t{1} << n;
  const int shard_bits = std::min(n, 8);
  const std::size_t shards = std::size_t{1} << shard_bits;
  const std::uint64_t per = total >> shard_bits;

  std::vector<std::vector<std::pair<int, word_t>>> found(shards);
  parallel_shards(shards, opt.workers, [&](std::size_t s) {
    std::uint64_t probes = 0;
    std::vector<std::uint8_t> sym(static_cast<std::size_t>(2 * n));
    for (std::uint64_t w = s * per; w < (s + 1) * per; ++w) {
      if (!detail::is_necklace(w, n, probes)) continue;
      if (detail::least_period(w, n) != n) continue;
      for (int i = 0; i < n; ++i) {
        sym[static_cast<std::size_t>(i)] = sym[static_cast<std::size_t>(i + n)] =
            static_cast<std::uint8_t>(detail::bit_at(w, i, n));
      }
      found[s].push_back({detail::nlc_scan(sym, opt.ops), w});
    }
    count(opt.ops, probes);
  });

  OracleCatalog cat;
  cat.n = n;
  for (const auto& shard : found) {
    for (const auto& [omega, w] : shard) {
      ShiftClass k;
      k.canonical = k.witness = BitSeq::from_word(w, n);
      k.omega = omega;
      cat.classes[omega].push_back(k);
      cat.totals[omega] += static_cast<std::uint64_t>(n);
    }
  }
  for (auto& [omega, v] : cat.classes) std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
    return a.canonical < b.canonical;
  });
  return cat;
}

/// Shift classes of P(n, omega) by exhaustive search.
inline std::vector<ShiftClass> oracle_P(int n, int omega, const OracleOptions& opt = {}) {
  auto cat = build_catalog(n, opt);
  auto it = cat.classes.find(omega);
  return it == cat.classes.end() ? std::vector<ShiftClass>{} : it->second;
}

/// Brute-force representatives of B(n, c): per rotation class, every
/// (member, form) pair with the maximal number of added terms.
inline std::vector<std::vector<EquivalenceEntry>> brute_representatives(int n, int c) {
  std::map<word_t, std::vector<EquivalenceEntry>> by_class;
  for (const BitSeq& s : gen_B(n, c)) {
    for (const BForm& f : decompose(s)) {
      if (f.c != c) continue;
      by_class[detail::min_rotation(s.word(), n)].push_back(
          {0, s, f, detail::add_count_word(s.word(), n, f.d)});
    }
  }
  std::vector<std::vector<EquivalenceEntry>> out;
  for (auto& [key, entries] : by_class) {
    int best = 0;
    for (const auto& e : entries) best = std::max(best, e.add);
    std::vector<EquivalenceEntry> top;
    for (const auto& e : entries) {
      if (e.add == best) top.push_back(e);
    }
    out.push_back(std::move(top));
  }
  return out;
}

/// Union over omega' >= c of P(n, omega') equals the rotation closure of
/// B(n, c), for ceil(log2 n) <= c <= floor(n/2)+1.
inline bool verify_theorem1(int n, int c, const OracleOptions& opt = {}) {
  if (n < 3 || n > 16 || c < ceil_log2(n) || c > n / 2 + 1 || c >= n) {
    throw std::out_of_range("verify_theorem1: (n=" + std::to_string(n) + ", c=" +
                            std::to_string(c) + ") outside the admissible range");
  }
  const auto cat = build_catalog(n, opt);
  std::vector<BitSeq> expected;
  for (const auto& [omega, v] : cat.classes) {
    if (omega < c) continue;
    for (const auto& k : v) expected.push_back(k.canonical);
  }
  std::sort(expected.begin(), expected.end());
  std::vector<BitSeq> got;
  for (const BitSeq& s : gen_B(n, c)) got.push_back(canonical_rotation(s).seq);
  std::sort(got.begin(), got.end());
  got.erase(std::unique(got.begin(), got.end()), got.end());
  return got == expected;
}

struct Theorem2Report {
  int n = 0;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  std::map<int, std::size_t> reps_by_add;  // from gen_R
  bool ok() const { return violations.empty(); }
};

/// nlc of the periodic extension equals nlc + add on every representative,
/// both from gen_R and from brute force over B(n, ceil(n/2)).
inline Theorem2Report verify_theorem2(int n) {
  if (n < 4 || n > 16) throw std::out_of_range("verify_theorem2 needs 4 <= n <= 16");
  Theorem2Report rep;
  rep.n = n;
  auto check = [&](const BitSeq& s, int add, const char* origin) {
    ++rep.checked;
    const int lhs = nlc_periodic(s);
    const int rhs = nlc_finite(s) + add;
    if (lhs != rhs) {
      rep.violations.push_back(std::string(origin) + " " + s.to_string() + ": periodic " +
                               std::to_string(lhs) + " != " + std::to_string(rhs));
    }
  };
  for (const RepEntry& e : gen_R(n).reps) {
    check(e.seq, e.add, "gen_R");
    ++rep.reps_by_add[e.add];
  }
  const int c = (n + 1) / 2;
  for (const auto& top : brute_representatives(n, c)) {
    for (const auto& e : top) check(e.seq, e.add, "brute");
  }
  return rep;
}

struct OpenProblemFinding {
  BitSeq seq;
  int n = 0;
  int c = 0;
  int d = 0;
  int t = 0;
  int max_nlc = 0;
  bool tied_alternative = false;  // another maximiser of the same class is consistent
};

struct OpenProblemReport {
  std::size_t scanned = 0;  // representatives with t > n-c-d
  std::vector<OpenProblemFinding> findings;     // max != n-d
  std::vector<OpenProblemFinding> lower_bound_failures;  // max < n-d
};

/// Representatives with t > n-c-d, 4 <= n <= max_n, floor(n/2) <= c < n:
/// collects every case where the largest rotated nlc differs from n-d.
inline OpenProblemReport scan_open_problem(int max_n, int min_n = 4) {
  if (max_n > 24 || min_n < 4) {
    throw std::out_of_range("scan_open_problem supports 4 <= n <= 24");
  }
  OpenProblemReport rep;
  for (int n = min_n; n <= max_n; ++n) {
    for (int c = n / 2; c < n; ++c) {
      for (const auto& top : brute_representatives(n, c)) {
        int max_nlc = -1;
        std::vector<OpenProblemFinding> local;
        bool consistent = false;
        for (const auto& e : top) {
          if (e.add <= n - c - e.form.d) {
            consistent = true;
            continue;
          }
          if (max_nlc < 0) {
            for (int k = 0; k < n; ++k) {
              max_nlc = std::max(max_nlc, nlc_finite(rotate_right(e.seq, k)));
            }
          }
          ++rep.scanned;
          const OpenProblemFinding f{e.seq, n, c, e.form.d, e.add, max_nlc};
          if (max_nlc != n - e.form.d) {
            local.push_back(f);
          } else {
            consistent = true;
          }
          if (max_nlc < n - e.form.d) rep.lower_bound_failures.push_back(f);
        }
        for (auto& f : local) {
          f.tied_alternative = consistent;
          rep.findings.push_back(f);
        }
      }
    }
  }
  return rep;
}

struct GenerationCheck {
  int omega = 0;
  std::string method;  // "small" or "large"
  std::size_t generated = 0;
  std::size_t expected = 0;
  bool pass = false;
};

struct GenerationCheckReport {
  int n = 0;
  std::vector<GenerationCheck> rows;
  bool ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
  }
};

/// Generated P(n, omega) against the exhaustive catalog for every omega in
/// [ceil(log2 n), n-1]; for even n, omega = n/2 is checked on both paths.
inline GenerationCheckReport verify_generation(int n, const OracleOptions& opt = {}) {
  if (n < 4 || n > 14) throw std::out_of_range("verify_generation needs 4 <= n <= 14");
  const auto cat = build_catalog(n, opt);
  const GenOptions gopt{opt.workers, nullptr};
  const auto R = gen_R(n, gopt);
  GenerationCheckReport rep;
  rep.n = n;
  for (int omega = ceil_log2(n); omega <= n - 1; ++omega) {
    auto it = cat.classes.find(omega);
    const auto expected =
        it == cat.classes.end() ? std::vector<BitSeq>{} : canonical_set(it->second);
    auto add_row = [&](const std::string& method, const std::vector<ShiftClass>& got) {
      const auto g = canonical_set(got);
      rep.rows.push_back({omega, method, g.size(), expected.size(), g == expected});
    };
    if (omega <= n / 2) add_row("small", gen_P_small(n, omega, gopt));
    if (omega >= R.c) add_row("large", classes_from_reps(R, omega));
  }
  return rep;
}

}  // namespace nlcgen

#endif  // NLCGEN_ORACLE_HPP
