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

#include "axincircle/commands.hpp"

#include <chrono>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "axincircle/incircle.hpp"
#include "axincircle/instance_io.hpp"
#include "axincircle/oracle.hpp"

namespace axincircle {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Loaded {
  std::vector<InstanceRecord> records;
  int exit_code = kExitOk;
};

Loaded load(std::istream* in, const GenConfig& gen, std::ostream& err) {
  Loaded l;
  if (in) {
    ReadResult r = read_instances(*in, err);
    l.records = std::move(r.records);
    if (r.errors) l.exit_code = kExitInputError;
    return l;
  }
  try {
    l.records = generate(gen);
  } catch (const GenerationExhausted& e) {
    err << "generation failed: " << e.what() << "\n";
    l.exit_code = kExitInputError;
  }
  return l;
}

int worst(int a, int b) { return std::max(a, b); }

}  // namespace

ReadResult read_instances(std::istream& in, std::ostream& err) {
  ReadResult r;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      InstanceRecord rec = parse_instance(line);
      if (auto v = validate_instance(rec)) {
        err << "line " << lineno << ": " << v->message() << "\n";
        ++r.errors;
        continue;
      }
      r.records.push_back(std::move(rec));
    } catch (const ParseError& e) {
      err << "line " << lineno << ": " << e.what() << "\n";
      ++r.errors;
    }
  }
  return r;
}

bool AuditReport::within_bounds() const {
  if (failures) return false;
  for (const auto& [config, stats] : per_config) {
    if (stats.max_degree > degree_bound(config)) return false;
  }
  return true;
}

AuditReport audit_degrees(const std::vector<InstanceRecord>& records) {
  AuditReport report;
  for (const InstanceRecord& rec : records) {
    try {
      const AuditedSign a = incircle_audited(rec.s1, rec.s2, rec.s3, rec.query);
      DegreeStats& s = report.per_config[a.config];
      ++s.instances;
      s.max_degree = std::max(s.max_degree, a.max_degree);
      if (a.max_degree == degree_bound(a.config)) ++s.attaining;
    } catch (const std::exception&) {
      ++report.failures;
    }
  }
  return report;
}

int cmd_eval(std::istream& in, std::ostream& out, std::ostream& err) {
  ReadResult r = read_instances(in, err);
  int code = r.errors ? kExitInputError : kExitOk;
  for (const InstanceRecord& rec : r.records) {
    ordered_json j;
    j["id"] = rec.id;
    try {
      j["sign"] = to_int(incircle(rec.s1, rec.s2, rec.s3, rec.query));
    } catch (const std::exception& e) {
      err << rec.id << ": " << e.what() << "\n";
      code = kExitInputError;
      continue;
    }
    out << j.dump() << "\n";
  }
  if (r.errors) err << r.errors << " malformed or invalid line(s)\n";
  return code;
}

int cmd_gen(const GenConfig& gen, std::ostream& out, std::ostream& err) {
  for (std::size_t i = 0; i < gen.count; ++i) {
    try {
      out << format_instance(generate_instance(gen, i)) << "\n";
    } catch (const GenerationExhausted& e) {
      err << "generation failed: " << e.what() << "\n";
      return kExitInputError;
    }
  }
  return kExitOk;
}

int cmd_verify(std::istream* in, const GenConfig& gen, std::ostream& out,
               std::ostream& err, std::ostream* log) {
  Loaded l = load(in, gen, err);
  std::size_t disagreements = 0, violations = 0;
  for (const InstanceRecord& rec : l.records) {
    ordered_json j;
    j["id"] = rec.id;
    bool agree = true;
    try {
      const AuditedSign fast =
          incircle_audited(rec.s1, rec.s2, rec.s3, rec.query);
      const Sign oracle = oracle_incircle(rec.s1, rec.s2, rec.s3, rec.query);
      j["sign"] = to_int(fast.sign);
      j["oracle"] = to_int(oracle);
      agree = fast.sign == oracle;
      if (rec.expected) {
        j["expected"] = to_int(*rec.expected);
        agree = agree && *rec.expected == fast.sign;
      }
      if (fast.max_degree > degree_bound(fast.config)) {
        j["degree"] = fast.max_degree;
        ++violations;
        agree = false;
      }
    } catch (const std::exception& e) {
      j["error"] = e.what();
      agree = false;
    }
    j["agree"] = agree;
    if (!agree) {
      ++disagreements;
      out << j.dump() << "\n";
    }
    if (log) *log << j.dump() << "\n";
  }
  err << "verified " << l.records.size() << " instance(s): " << disagreements
      << " disagreement(s), " << violations << " degree violation(s)\n";
  return worst(l.exit_code, disagreements ? kExitFailure : kExitOk);
}

int cmd_audit(std::istream* in, const GenConfig& gen, std::ostream& out,
              std::ostream& err) {
  Loaded l = load(in, gen, err);
  const AuditReport report = audit_degrees(l.records);
  for (const auto& [config, s] : report.per_config) {
    out << to_string(config) << " max degree " << s.max_degree << " (bound "
        << degree_bound(config) << ", instances " << s.instances
        << ", attaining " << s.attaining << ")\n";
  }
  if (report.failures) {
    err << report.failures << " instance(s) raised an error\n";
  }
  return worst(l.exit_code, report.within_bounds() ? kExitOk : kExitFailure);
}

int cmd_bench(std::istream* in, const GenConfig& gen, std::ostream& out,
              std::ostream& err) {
  using clock = std::chrono::steady_clock;
  Loaded l = load(in, gen, err);
  struct Timing {
    std::size_t instances = 0;
    clock::duration fast{}, oracle{};
  };
  std::map<Config, Timing> per_config;
  for (const InstanceRecord& rec : l.records) {
    Timing& t = per_config[rec.config()];
    ++t.instances;
    const auto t0 = clock::now();
    try {
      incircle(rec.s1, rec.s2, rec.s3, rec.query);
    } catch (const std::exception&) {
    }
    const auto t1 = clock::now();
    try {
      oracle_incircle(rec.s1, rec.s2, rec.s3, rec.query);
    } catch (const std::exception&) {
    }
    t.fast += t1 - t0;
    t.oracle += clock::now() - t1;
  }
  for (const auto& [config, t] : per_config) {
    const double fast_ms =
        std::chrono::duration<double, std::milli>(t.fast).count();
    const double oracle_ms =
        std::chrono::duration<double, std::milli>(t.oracle).count();
    char line[160];
    std::snprintf(line, sizeof line,
                  "%s instances %zu fast %.3f ms oracle %.3f ms ratio %.1f",
                  std::string(to_string(config)).c_str(), t.instances, fast_ms,
                  oracle_ms, fast_ms > 0 ? oracle_ms / fast_ms : 0.0);
    out << line << "\n";
  }
  return l.exit_code;
}

}  // namespace axincircle
