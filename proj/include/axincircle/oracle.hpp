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

// Reference incircle computed the slow way: solve for the circle center in
// Q(sqrt(D)) from the squared-distance functions of the three sites, keep
// the unique candidate whose tangency points are interior to the segments
// and counterclockwise, then measure the query against it.
//
// Shares no formulas with the fast predicate.

#ifndef AXINCIRCLE_ORACLE_HPP_
#define AXINCIRCLE_ORACLE_HPP_

#include <array>
#include <stdexcept>
#include <string>

#include "axincircle/geom.hpp"
#include "axincircle/quad_ext.hpp"

namespace axincircle {

class OracleError : public std::runtime_error {
 public:
  enum class Code { NoValidCircle, AmbiguousCircle };

  OracleError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

struct OraclePoint {
  QuadExt x;
  QuadExt y;
};

struct OracleCircle {
  OraclePoint center;
  QuadExt radius2;
  std::array<OraclePoint, 3> tangency;
};

OracleCircle oracle_circle(const Site& s1, const Site& s2, const Site& s3);

// Same sign convention as incircle().
Sign oracle_incircle(const Site& s1, const Site& s2, const Site& s3,
                     const Site& query);
Sign oracle_incircle(const OracleCircle& circle, const Site& query);

bool circle_exists(const Site& s1, const Site& s2, const Site& s3);

// Which root of q2 x^2 + q1 x + q0 the value r is; a double root reports
// Lower. Throws std::domain_error when r is not a root.
RootChoice which_root(const mpz_class& q2, const mpz_class& q1,
                      const mpz_class& q0, const QuadExt& r);

}  // namespace axincircle

#endif  // AXINCIRCLE_ORACLE_HPP_
