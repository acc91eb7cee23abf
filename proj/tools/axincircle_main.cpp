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

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "axincircle/commands.hpp"

namespace {

using namespace axincircle;

struct Options {
  std::string in;
  std::string out;
  std::string log;
  std::string config = "mixed";
  GenConfig gen;
};

void add_generator_options(CLI::App* cmd, Options& o, bool with_config) {
  cmd->add_option("--seed", o.gen.seed, "Generator seed");
  cmd->add_option("--count", o.gen.count, "Number of instances");
  if (with_config) {
    cmd->add_option("--config", o.config,
                    "Configuration tag (PPPP ... SSSS) or mixed");
  }
  cmd->add_option("--bound", o.gen.bound, "Largest |coordinate|")
      ->check(CLI::Range(10LL, 1LL << 40));
  cmd->add_option("--degenerate-frac", o.gen.degenerate_frac,
                  "Share of queries placed exactly on the circle")
      ->check(CLI::Range(0.0, 1.0));
}

// Returns false on an unknown tag.
bool resolve_config(Options& o) {
  if (o.config == "mixed") {
    o.gen.config.reset();
    return true;
  }
  o.gen.config = parse_config(o.config);
  return o.gen.config.has_value();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact incircle predicate for points and axis-aligned segments"};
  app.require_subcommand(1);
  Options o;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate instances");
  eval->add_option("--in", o.in, "Input JSONL")->required();
  eval->add_option("--out", o.out, "Output JSONL (default stdout)");

  CLI::App* gen = app.add_subcommand("gen", "Generate instances");
  add_generator_options(gen, o, true);
  gen->add_option("--out", o.out, "Output JSONL (default stdout)");

  CLI::App* verify =
      app.add_subcommand("verify", "Compare the predicate with the oracle");
  verify->add_option("--in", o.in, "Fixture JSONL instead of generating");
  add_generator_options(verify, o, true);
  verify->add_option("--out", o.out, "Disagreements (default stdout)");
  verify->add_option("--log", o.log, "Every verified record");

  CLI::App* audit = app.add_subcommand("audit", "Certify evaluated degrees");
  audit->add_option("--in", o.in, "Fixture JSONL instead of generating");
  add_generator_options(audit, o, true);

  CLI::App* bench = app.add_subcommand("bench", "Time predicate and oracle");
  bench->add_option("--in", o.in, "Fixture JSONL instead of generating");
  add_generator_options(bench, o, true);

  CLI11_PARSE(app, argc, argv);
  if (!resolve_config(o)) {
    std::cerr << "unknown config \"" << o.config << "\"\n";
    return kExitInputError;
  }

  std::unique_ptr<std::ifstream> in_file;
  if (!o.in.empty()) {
    in_file = std::make_unique<std::ifstream>(o.in);
    if (!*in_file) {
      std::cerr << "cannot open " << o.in << "\n";
      return kExitInputError;
    }
  }
  std::unique_ptr<std::ofstream> out_file;
  if (!o.out.empty()) {
    out_file = std::make_unique<std::ofstream>(o.out);
    if (!*out_file) {
      std::cerr << "cannot write " << o.out << "\n";
      return kExitInputError;
    }
  }
  std::ostream& out = out_file ? *out_file : std::cout;

  if (eval->parsed()) return cmd_eval(*in_file, out, std::cerr);
  if (gen->parsed()) return cmd_gen(o.gen, out, std::cerr);
  if (verify->parsed()) {
    std::unique_ptr<std::ofstream> log;
    if (!o.log.empty()) log = std::make_unique<std::ofstream>(o.log);
    return cmd_verify(in_file.get(), o.gen, out, std::cerr, log.get());
  }
  if (audit->parsed()) return cmd_audit(in_file.get(), o.gen, out, std::cerr);
  return cmd_bench(in_file.get(), o.gen, out, std::cerr);
}
