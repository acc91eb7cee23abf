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

// Random valid instances. Instance i depends only on (seed, i).
//
// Generic instances draw sites in a random window, let the oracle find the
// circle against long provisional segments, then trim every segment to a
// random span around its tangency point. Degenerate instances use an
// integer center and a radius k (m^2 + n^2), so the circle carries twelve
// lattice points; the query then touches the circle exactly.

#ifndef AXINCIRCLE_GENERATOR_HPP_
#define AXINCIRCLE_GENERATOR_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "axincircle/geom.hpp"

namespace axincircle {

class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::optional<Config> config;  // nullopt: cycle through all eight
  long long bound = 1000000;
  double degenerate_frac = 0.2;
};

inline constexpr int kGenerationRetries = 64;

// Portable across standard libraries: only the raw engine output is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [lo, hi].
  long long uniform(long long lo, long long hi);
  // Uniform on [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

Config config_for_index(const GenConfig& cfg, std::size_t index);

// Carries the configuration tag and the oracle's sign as "expected".
InstanceRecord generate_instance(const GenConfig& cfg, std::size_t index);
std::vector<InstanceRecord> generate(const GenConfig& cfg);

}  // namespace axincircle

#endif  // AXINCIRCLE_GENERATOR_HPP_
