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

#ifndef NLCGEN_REPORT_HPP
#define NLCGEN_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "nlcgen/gen_debruijn.hpp"
#include "nlcgen/gen_large.hpp"
#include "nlcgen/gen_small.hpp"
#include "nlcgen/oracle.hpp"
#include "nlcgen/shift_class.hpp"

namespace nlcgen {

enum class Method { automatic, small, large, oracle, debruijn };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::small: return "small";
    case Method::large: return "large";
    case Method::oracle: return "oracle";
    case Method::debruijn: return "debruijn";
    case Method::automatic: break;
  }
  return "auto";
}

/// Result of one generation run.
struct GenerationReport {
  int n = 0;
  int omega = 0;
  Method method = Method::automatic;
  std::vector<BitSeq> members;  // S-set, representatives or canonicals
  std::vector<ShiftClass> classes;
  std::uint64_t operation_counter = 0;
  std::optional<double> elapsed;  // seconds, only when timing was asked for

  std::size_t class_count() const { return classes.size(); }
  std::size_t sequence_count() const {
    std::size_t k = 0;
    for (const auto& c : classes) k += static_cast<std::size_t>(c.orbit_size());
    return k;
  }
};

inline Method resolve_method(int n, int omega, Method m) {
  if (m != Method::automatic) return m;
  return omega <= n / 2 ? Method::small : Method::large;
}

inline GenerationReport generate(int n, int omega, Method method, unsigned workers,
                                 bool timing = false) {
  GenerationReport rep;
  rep.n = n;
  rep.omega = omega;
  rep.method = resolve_method(n, omega, method);
  OpCounter ops;
  const GenOptions opt{workers, &ops};
  const auto t0 = std::chrono::steady_clock::now();
  switch (rep.method) {
    case Method::small: {
      auto r = gen_small(n, omega, opt);
      rep.members = std::move(r.s_set);
      rep.classes = std::move(r.classes);
      break;
    }
    case Method::large: {
      const auto R = gen_R(n, opt);
      if (omega < R.c || omega > n - 1) {
        throw std::out_of_range("omega=" + std::to_string(omega) +
                                " outside [ceil(n/2), n-1] for the large-complexity generator");
      }
      rep.classes = classes_from_reps(R, omega);
      for (const auto& k : rep.classes) rep.members.push_back(k.witness);
      break;
    }
    case Method::oracle: {
      OracleOptions oo;
      oo.workers = workers;
      oo.ops = &ops;
      rep.classes = oracle_P(n, omega, oo);
      for (const auto& k : rep.classes) rep.members.push_back(k.canonical);
      break;
    }
    case Method::debruijn: {
      const int m = ceil_log2(n);
      if ((1 << m) != n || omega != m) {
        throw std::out_of_range("the de Bruijn generator needs n = 2^omega");
      }
      rep.classes = gen_debruijn(m, opt);
      for (const auto& k : rep.classes) rep.members.push_back(k.witness);
      break;
    }
    case Method::automatic: break;
  }
  std::sort(rep.members.begin(), rep.members.end());
  rep.operation_counter = ops.value();
  if (timing) {
    rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return rep;
}

inline nlohmann::ordered_json to_json(const GenerationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = r.n;
  j["omega"] = r.omega;
  j["method"] = method_name(r.method);
  j["class_count"] = r.class_count();
  j["sequence_count"] = r.sequence_count();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& k : r.classes) {
    nlohmann::ordered_json c;
    c["canonical"] = k.canonical.to_string();
    c["witness"] = k.witness.to_string();
    c["spacing"] = k.form ? nlohmann::ordered_json(k.form->d) : nlohmann::ordered_json();
    c["add"] = k.add;
    arr.push_back(std::move(c));
  }
  j["classes"] = std::move(arr);
  j["operation_counter"] = r.operation_counter;
  if (r.elapsed) j["elapsed"] = *r.elapsed;
  return j;
}

inline void write_lines(std::ostream& out, const std::vector<BitSeq>& seqs) {
  for (const auto& s : seqs) out << s.to_string() << '\n';
}

inline void write_csv(std::ostream& out, const GenerationReport& r) {
  out << "canonical,omega,add,spacing\n";
  for (const auto& k : r.classes) {
    out << k.canonical.to_string() << ',' << k.omega << ',' << k.add << ',';
    if (k.form) out << k.form->d;
    out << '\n';
  }
}

}  // namespace nlcgen

#endif  // NLCGEN_REPORT_HPP
