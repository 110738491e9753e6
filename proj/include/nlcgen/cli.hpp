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
// Command-line front end. Exit codes: 0 success, 1 failed verification,
// 2 usage or input error.

#ifndef NLCGEN_CLI_HPP
#define NLCGEN_CLI_HPP

#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlcgen/bitseq.hpp"
#include "nlcgen/complexity.hpp"
#include "nlcgen/gen_debruijn.hpp"
#include "nlcgen/oracle.hpp"
#include "nlcgen/report.hpp"
#include "nlcgen/shift_profile.hpp"
#include "nlcgen/structure.hpp"

namespace nlcgen::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

namespace detail {

inline void print_ints(std::ostream& out, const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  out << '\n';
}

inline std::string form_text(const BForm& f) {
  return "c=" + std::to_string(f.c) + " d=" + std::to_string(f.d) + " q=" + std::to_string(f.q) +
         " r=" + std::to_string(f.r);
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Runs one command line; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonlinear complexity of periodic binary sequences"};
  app.name("nlcgen");
  app.require_subcommand(1);
  int status = kOk;

  // nlc
  std::string bits;
  bool periodic = false;
  std::string engine = "naive";
  auto* nlc = app.add_subcommand("nlc", "nonlinear complexity of a sequence");
  nlc->add_option("bits", bits, "0/1 string")->required();
  nlc->add_flag("--periodic", periodic, "complexity of the periodic extension");
  nlc->add_option("--engine", engine, "naive or fast")
      ->check(CLI::IsMember({"naive", "fast"}));

  // profile
  bool right = false;
  bool left = false;
  bool detail_rows = false;
  auto* profile = app.add_subcommand("profile", "nlc of every rotation");
  profile->add_option("bits", bits, "0/1 string")->required();
  auto* left_flag = profile->add_flag("--left", left, "left rotations (default)");
  profile->add_flag("--right", right, "right rotations")->excludes(left_flag);
  profile->add_flag("--detail", detail_rows, "one row per rotation with its forms");

  // decompose
  auto* decomp = app.add_subcommand("decompose", "structured forms and added terms");
  decomp->add_option("bits", bits, "0/1 string")->required();

  // gen
  int n = 0;
  int omega = 0;
  std::string method = "auto";
  std::string format = "lines";
  bool expand = false;
  bool timing = false;
  unsigned workers = default_workers();
  auto* gen = app.add_subcommand("gen", "generate P(n, omega)");
  gen->add_option("--n", n, "period")->required();
  gen->add_option("--omega", omega, "nonlinear complexity")->required();
  gen->add_option("--method", method, "auto, small, large, oracle or debruijn")
      ->check(CLI::IsMember({"auto", "small", "large", "oracle", "debruijn"}));
  gen->add_option("--format", format, "lines, json or csv")
      ->check(CLI::IsMember({"lines", "json", "csv"}));
  gen->add_flag("--expand", expand, "print every rotation of every class");
  gen->add_flag("--timing", timing, "include elapsed time in json output");
  gen->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  // debruijn
  int m = 0;
  bool count_only = false;
  bool formula = false;
  auto* db = app.add_subcommand("debruijn", "de Bruijn sequences of order m");
  db->add_option("--m", m, "order (3..5)")->required();
  db->add_flag("--count-only", count_only, "print class and prefilter counts");
  db->add_flag("--formula", formula, "also print the closed-form counts");
  db->add_option("--format", format, "lines or json")->check(CLI::IsMember({"lines", "json"}));
  db->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  // verify
  bool theorems = false;
  auto* verify = app.add_subcommand("verify", "compare generators with exhaustive search");
  verify->add_option("--n", n, "period (4..14)")->required();
  verify->add_flag("--theorems", theorems, "also check the B-closure and c+add identities");
  verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  // scan-open-problem
  int max_n = 16;
  int min_n = 4;
  auto* scan = app.add_subcommand("scan-open-problem",
                                  "max rotated nlc of representatives with t > n-c-d");
  scan->add_option("--max-n", max_n, "largest period (<= 24)");
  scan->add_option("--min-n", min_n, "smallest period (>= 4)");

  // bench
  bool skip_oracle = false;
  auto* bench = app.add_subcommand("bench", "operation counts: generator vs exhaustive search");
  bench->add_option("--n", n, "period")->required();
  bench->add_option("--omega", omega, "nonlinear complexity")->required();
  bench->add_option("--format", format, "lines or json")->check(CLI::IsMember({"lines", "json"}));
  bench->add_flag("--skip-oracle", skip_oracle, "generator only");
  bench->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"nlcgen"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*nlc) {
      const BitSeq s = BitSeq::from_bits(bits);
      int v = 0;
      if (engine == "fast") {
        v = periodic ? nlc_periodic_fast(s) : nlc_finite_fast(s);
      } else {
        v = periodic ? nlc_periodic(s) : nlc_finite(s);
      }
      out << v << '\n';
    } else if (*profile) {
      const BitSeq s = BitSeq::from_bits(bits);
      const auto p = shift_profile(s, right ? Direction::right : Direction::left);
      if (!detail_rows) {
        detail::print_ints(out, p.values);
      } else {
        for (std::size_t k = 0; k < p.values.size(); ++k) {
          out << k << ' ' << p.values[k];
          for (const auto& mem : p.memberships[k]) {
            out << " (" << detail::form_text(mem.form) << " add=" << mem.add << ')';
          }
          out << '\n';
        }
      }
    } else if (*decomp) {
      const BitSeq s = BitSeq::from_bits(bits);
      const auto forms = decompose(s);
      if (forms.empty()) out << "none\n";
      for (const auto& f : forms) out << detail::form_text(f) << " add=" << add_count(s, f) << '\n';
    } else if (*gen) {
      const Method mth = method == "small"      ? Method::small
                         : method == "large"    ? Method::large
                         : method == "oracle"   ? Method::oracle
                         : method == "debruijn" ? Method::debruijn
                                                : Method::automatic;
      const auto rep = generate(n, omega, mth, workers, timing);
      if (format == "json") {
        out << to_json(rep).dump(2) << '\n';
      } else if (format == "csv") {
        write_csv(out, rep);
      } else {
        write_lines(out, expand ? expand_classes(rep.classes) : rep.members);
      }
    } else if (*db) {
      const GenOptions opt{workers, nullptr};
      if (count_only) {
        const auto classes = gen_debruijn(m, opt);
        const auto cnt = count_B0_tilde(m, opt);
        out << "classes=" << classes.size() << " prefilter=" << cnt.enumerated << '\n';
        if (formula) {
          out << "multinomial=" << cnt.multinomial << " printed=" << cnt.printed_formula
              << " corrected=" << cnt.corrected_formula << '\n';
        }
      } else {
        const auto rep = generate(1 << m, m, Method::debruijn, workers);
        if (format == "json") {
          out << to_json(rep).dump(2) << '\n';
        } else {
          write_lines(out, canonical_set(rep.classes));
        }
      }
    } else if (*verify) {
      OracleOptions oo;
      oo.workers = workers;
      const auto rep = verify_generation(n, oo);
      for (const auto& r : rep.rows) {
        out << "omega=" << r.omega << " method=" << r.method << " generated=" << r.generated
            << " expected=" << r.expected << ' ' << (r.pass ? "pass" : "FAIL") << '\n';
      }
      bool ok = rep.ok();
      if (theorems) {
        for (int c = ceil_log2(n); c <= n / 2 + 1 && c < n; ++c) {
          const bool t1 = verify_theorem1(n, c, oo);
          ok = ok && t1;
          out << "closure c=" << c << ' ' << (t1 ? "pass" : "FAIL") << '\n';
        }
        const auto t2 = verify_theorem2(n);
        ok = ok && t2.ok();
        out << "c+add checked=" << t2.checked << " violations=" << t2.violations.size() << '\n';
      }
      out << (ok ? "PASS" : "FAIL") << '\n';
      status = ok ? kOk : kFailed;
    } else if (*scan) {
      const auto rep = scan_open_problem(max_n, min_n);
      out << "scanned=" << rep.scanned << " findings=" << rep.findings.size()
          << " below_n_minus_d=" << rep.lower_bound_failures.size() << '\n';
      for (const auto& f : rep.findings) {
        out << f.seq.to_string() << " n=" << f.n << " c=" << f.c << " d=" << f.d << " t=" << f.t
            << " max=" << f.max_nlc << (f.tied_alternative ? " tied_alternative" : "") << '\n';
      }
      status = rep.lower_bound_failures.empty() ? kOk : kFailed;
    } else if (*bench) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto g = generate(n, omega, Method::automatic, workers);
      const double gen_s = detail::seconds_since(t0);
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["n"] = n;
      j["omega"] = omega;
      j["method"] = method_name(g.method);
      j["classes"] = g.class_count();
      j["generator_ops"] = g.operation_counter;
      j["generator_seconds"] = gen_s;
      if (!skip_oracle) {
        const auto t1 = std::chrono::steady_clock::now();
        const auto o = generate(n, omega, Method::oracle, workers);
        const double or_s = detail::seconds_since(t1);
        const bool agree = canonical_set(o.classes) == canonical_set(g.classes);
        j["oracle_ops"] = o.operation_counter;
        j["oracle_seconds"] = or_s;
        j["ratio"] = g.operation_counter == 0
                         ? 0.0
                         : static_cast<double>(o.operation_counter) /
                               static_cast<double>(g.operation_counter);
        j["agree"] = agree;
        if (!agree) status = kFailed;
      }
      if (format == "json") {
        out << j.dump(2) << '\n';
      } else {
        for (const auto& [key, val] : j.items()) {
          if (key != "schema") out << key << '=' << (val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
        }
      }
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}

}  // namespace nlcgen::cli

#endif  // NLCGEN_CLI_HPP
