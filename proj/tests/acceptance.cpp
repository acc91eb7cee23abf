// Copyright 2026 The axincircle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "axincircle/center_descriptor.hpp"
#include "axincircle/commands.hpp"
#include "axincircle/generator.hpp"
#include "axincircle/incircle.hpp"
#include "axincircle/oracle.hpp"
#include "root_sign_reference.hpp"
#include "test_util.hpp"

namespace axincircle {
namespace {

using testing::P;
using F = testing::Fixtures;

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<InstanceRecord> seed42_corpus() {
  GenConfig g;
  g.seed = 42;
  g.count = 10000;
  return generate(g);
}

Outcome oracle_equivalence() {
  GenConfig g;
  g.seed = 42;
  g.count = 10000;
  std::ostringstream out, err;
  const auto t0 = std::chrono::steady_clock::now();
  const int code = cmd_verify(nullptr, g, out, err);
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  std::string summary = err.str();
  if (!summary.empty() && summary.back() == '\n') summary.pop_back();
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.1f s", secs);
  return {code == kExitOk && secs < 120.0, summary + buf};
}

Outcome degree_certification() {
  GenConfig g;
  g.seed = 7;
  g.count = 5000;
  const AuditReport r = audit_degrees(generate(g));
  bool ok = r.within_bounds();
  std::string detail;
  for (Config c : kAllConfigs) {
    auto it = r.per_config.find(c);
    if (it == r.per_config.end()) {
      ok = false;
      detail += std::string(to_string(c)) + ":none ";
      continue;
    }
    const DegreeStats& s = it->second;
    if (s.attaining == 0) ok = false;
    detail += std::string(to_string(c)) + ":" + std::to_string(s.max_degree) +
              "/" + std::to_string(degree_bound(c)) + " ";
  }
  if (r.failures) detail += std::to_string(r.failures) + " error(s)";
  if (!detail.empty() && detail.back() == ' ') detail.pop_back();
  return {ok, detail};
}

Outcome root_sign_suite() {
  const testing::SuiteResult random =
      testing::run_random_suite(100000, 20260101, 1000000000L);
  const testing::SuiteResult grid = testing::run_grid_suite(8);
  std::string detail = "random " + std::to_string(random.agree) + "/" +
                       std::to_string(random.total) + " (" +
                       std::to_string(random.zeros) + " zero), grid " +
                       std::to_string(grid.agree) + "/" +
                       std::to_string(grid.total);
  if (!random.ok()) detail += "; " + random.first_failure;
  if (!grid.ok()) detail += "; " + grid.first_failure;
  return {random.ok() && grid.ok(), detail};
}

Outcome tangency_exactness() {
  std::size_t total = 0, zero = 0;
  for (Config c : kAllConfigs) {
    GenConfig g;
    g.seed = 1000 + static_cast<int>(c);
    g.count = 125;
    g.config = c;
    g.degenerate_frac = 1.0;
    for (const InstanceRecord& rec : generate(g)) {
      ++total;
      try {
        if (incircle(rec.s1, rec.s2, rec.s3, rec.query) == Sign::Zero &&
            rec.expected == Sign::Zero) {
          ++zero;
        }
      } catch (const std::exception&) {
      }
    }
  }
  return {total == 1000 && zero == total,
          std::to_string(zero) + "/" + std::to_string(total) + " return 0"};
}

Outcome reflection_invariance(const std::vector<InstanceRecord>& corpus) {
  std::size_t same = 0;
  for (const InstanceRecord& rec : corpus) {
    const InstanceRecord r = reflect_instance(rec);
    try {
      if (incircle(rec.s1, rec.s2, rec.s3, rec.query) ==
          incircle(r.s1, r.s2, r.s3, r.query)) {
        ++same;
      }
    } catch (const std::exception&) {
    }
  }
  return {same == corpus.size() && !corpus.empty(),
          std::to_string(same) + "/" + std::to_string(corpus.size())};
}

bool descriptor_matches(const CenterDescriptor& d, const OracleCircle& o,
                        std::string& why);

Outcome coefficient_fixtures() {
  std::vector<std::string> failures;
  auto check = [&](const char* name, bool ok) {
    if (!ok) failures.push_back(name);
  };
  DegreeAudit a;
  std::string why;

  const CenterDescriptor e3 = descriptor_pps(F::e3_a(), F::e3_b(), F::e3_cd(), a);
  const QuadraticRoots e3r = solve_quadratic(
      e3.x_poly.q2.value(), e3.x_poly.q1.value(), e3.x_poly.q0.value());
  check("E3 roots", e3r.count == 2 && e3r.lower == QuadExt(-40) &&
                        e3r.upper == QuadExt(0));
  check("E3 center",
        descriptor_matches(e3, oracle_circle(F::e3_a(), F::e3_b(), F::e3_cd()),
                           why));

  const CenterDescriptor r13 =
      descriptor_pss_perp(F::r13_a(), F::r13_cd(), F::r13_fg(), a);
  const QuadraticRoots r13r = solve_quadratic(
      r13.y_poly.q2.value(), r13.y_poly.q1.value(), r13.y_poly.q0.value());
  check("E-R13 roots", r13r.count == 2 && r13r.lower == QuadExt(7) &&
                           r13r.upper == QuadExt(35));
  check("E-R13 center",
        descriptor_matches(
            r13, oracle_circle(F::r13_a(), F::r13_cd(), F::r13_fg()), why));

  const CenterDescriptor e4 =
      descriptor_pss_parallel(F::e4_a(), F::e4_cd(), F::e4_fg(), a);
  const QuadraticRoots e4r = solve_quadratic(
      e4.x_poly.q2.value(), e4.x_poly.q1.value(), e4.x_poly.q0.value());
  check("E4 roots", e4r.count == 2 && e4r.lower == QuadExt(-8) &&
                        e4r.upper == QuadExt(0));
  check("E4 center",
        descriptor_matches(e4, oracle_circle(F::e4_a(), F::e4_cd(), F::e4_fg()),
                           why));

  check("E2 Q=(4,2)",
        incircle(F::e2_ab(), F::e2_cd(), F::e2_fg(), P(4, 2)) == Sign::Zero &&
            oracle_incircle(F::e2_ab(), F::e2_cd(), F::e2_fg(), P(4, 2)) ==
                Sign::Zero);

  // Uncorrected forms must not reproduce the fixtures.
  {
    const long xa = 0, ya = 10, xb = -4, yb = 8, yc = 0;
    const long p2 = yb - ya;
    const long p1 = (yb - yc) * (xa - xb) - 2 * xb * p2;
    const long p0 =
        p2 * xb * xb + (yc - yb) * ((xb * xb - xa * xa) + (ya - yc) * p2);
    const QuadraticRoots r = solve_quadratic(p2, p1, p0);
    check("uncorrected PPS rejected",
          !(r.count == 2 && r.lower == QuadExt(-40) && r.upper == QuadExt(0)));
  }
  {
    const long xa = 4, ya = 7, yc = 0, xf = -10;
    const long t1 = -2 * (ya + xa + xf - 2 * yc);
    const long t0 = (xa + xf) * (xa + xf) + ya * ya - 2 * yc * (xa + xf);
    check("uncorrected R13 rejected", solve_quadratic(1, t1, t0).count == 0);
  }

  std::string detail = failures.empty() ? "E3, E-R13, E4, E2 reproduced; "
                                          "uncorrected forms rejected"
                                        : "";
  for (const std::string& f : failures) detail += f + " failed; ";
  return {failures.empty(), detail};
}

// Chosen root equals the oracle center coordinate, or the two roots
// coincide.
bool choice_matches(const QuadraticPoly& q, RootChoice choice,
                    const QuadExt& v) {
  if (q.is_linear()) {
    return QuadExt(q.q1.value()) * v + QuadExt(q.q0.value()) == QuadExt(0);
  }
  const mpz_class disc =
      q.q1.value() * q.q1.value() - 4 * q.q2.value() * q.q0.value();
  try {
    const RootChoice r =
        which_root(q.q2.value(), q.q1.value(), q.q0.value(), v);
    return disc == 0 || r == choice;
  } catch (const std::domain_error&) {
    return false;
  }
}

bool descriptor_matches(const CenterDescriptor& d, const OracleCircle& o,
                        std::string& why) {
  const QuadExt& xk = o.center.x;
  const QuadExt& yk = o.center.y;
  if (!choice_matches(d.x_poly, d.x_choice, xk)) {
    why = "x root " + xk.str();
    return false;
  }
  if (!choice_matches(d.y_poly, d.y_choice, yk)) {
    why = "y root " + yk.str();
    return false;
  }
  if (QuadExt(d.beta.value()) * yk - QuadExt(d.alpha1.value()) * xk -
          QuadExt(d.alpha0.value()) !=
      QuadExt(0)) {
    why = "linear relation";
    return false;
  }
  return true;
}

Outcome root_tables(const std::vector<InstanceRecord>& corpus) {
  std::size_t checked = 0, matched = 0, special = 0;
  std::string first;
  for (const InstanceRecord& rec : corpus) {
    const NormalizedInstance n =
        normalize_instance(rec.s1, rec.s2, rec.s3, rec.query);
    const auto& s = n.sites;
    DegreeAudit a;
    CenterDescriptor d;
    switch (n.config) {
      case Config::PPSP:
      case Config::PPSS:
        if (s[0].point().y == s[1].point().y) {
          ++special;
          continue;
        }
        d = descriptor_pps(s[0].point(), s[1].point(), s[2].segment(), a);
        break;
      case Config::PSSP:
      case Config::PSSS:
        d = s[2].segment().is_horizontal()
                ? descriptor_pss_parallel(s[0].point(), s[1].segment(),
                                          s[2].segment(), a)
                : descriptor_pss_perp(s[0].point(), s[1].segment(),
                                      s[2].segment(), a);
        break;
      default:
        continue;
    }
    ++checked;
    std::string why;
    if (descriptor_matches(d, oracle_circle(s[0], s[1], s[2]), why)) {
      ++matched;
    } else if (first.empty()) {
      first = rec.id + ": " + why;
    }
  }
  std::string detail = std::to_string(matched) + "/" +
                       std::to_string(checked) + " tabled roots match (" +
                       std::to_string(special) + " equal-height PPS skipped)";
  if (!first.empty()) detail += "; first mismatch " + first;
  return {checked > 0 && matched == checked, detail};
}

}  // namespace
}  // namespace axincircle

int main() {
  using namespace axincircle;
  const std::vector<InstanceRecord> corpus = seed42_corpus();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {
          {"oracle equivalence", oracle_equivalence},
          {"degree certification", degree_certification},
          {"sign at root micro-suite", root_sign_suite},
          {"tangency exactness", tangency_exactness},
          {"reflection invariance",
           [&] { return reflection_invariance(corpus); }},
          {"coefficient regression fixtures", coefficient_fixtures},
          {"root table validation", [&] { return root_tables(corpus); }},
      };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, criteria[i].first,
                o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
