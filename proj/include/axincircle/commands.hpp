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

// Subcommands of the axincircle tool, written against streams so tests can
// drive them without files.
//
// Exit codes: 0 success, 1 disagreement or degree-bound violation,
// 2 input error.

#ifndef AXINCIRCLE_COMMANDS_HPP_
#define AXINCIRCLE_COMMANDS_HPP_

#include <iosfwd>
#include <map>
#include <vector>

#include "axincircle/generator.hpp"
#include "axincircle/geom.hpp"

namespace axincircle {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

struct ReadResult {
  std::vector<InstanceRecord> records;
  std::size_t errors = 0;
};

// Skips blank lines. Malformed or invalid lines are reported to `err` with
// their 1-based line number and left out of `records`.
ReadResult read_instances(std::istream& in, std::ostream& err);

struct DegreeStats {
  std::size_t instances = 0;
  int max_degree = 0;
  std::size_t attaining = 0;  // instances reaching the configuration bound
};

struct AuditReport {
  std::map<Config, DegreeStats> per_config;
  std::size_t failures = 0;  // exceptions raised by the predicate

  bool within_bounds() const;
};

AuditReport audit_degrees(const std::vector<InstanceRecord>& records);

// `in` is null when instances come from the generator settings in `gen`.
int cmd_eval(std::istream& in, std::ostream& out, std::ostream& err);
int cmd_gen(const GenConfig& gen, std::ostream& out, std::ostream& err);
int cmd_verify(std::istream* in, const GenConfig& gen, std::ostream& out,
               std::ostream& err, std::ostream* log = nullptr);
int cmd_audit(std::istream* in, const GenConfig& gen, std::ostream& out,
              std::ostream& err);
int cmd_bench(std::istream* in, const GenConfig& gen, std::ostream& out,
              std::ostream& err);

}  // namespace axincircle

#endif  // AXINCIRCLE_COMMANDS_HPP_
