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

// Degree-tagged exact integers and the root-sign procedures that every
// incircle case reduces to.
//
// A DegreeTagged value carries the formal algebraic degree of the
// expression that produced it, in the input coordinates. Every sign taken
// through sign_of() is reported to a DegreeAudit, so a predicate call can
// certify the largest degree it actually evaluated.

#ifndef AXINCIRCLE_SIGN_ENGINE_HPP_
#define AXINCIRCLE_SIGN_ENGINE_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

#include "axincircle/geom.hpp"

namespace axincircle {

// Thrown when two operands of a sum have different formal degrees. All
// expressions in the predicate are homogeneous, so this flags a
// transcription error. Disable with AXINCIRCLE_NO_DEGREE_CHECKS.
class InhomogeneousExpression : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DegreeTagged {
 public:
  DegreeTagged() = default;
  DegreeTagged(mpz_class value, int degree)
      : value_(std::move(value)), degree_(degree) {}

  // Input coordinates have degree 1, literal constants degree 0.
  static DegreeTagged coord(const Coord& c) { return {c, 1}; }
  static DegreeTagged constant(long v) { return {mpz_class(v), 0}; }

  const mpz_class& value() const { return value_; }
  int degree() const { return degree_; }
  bool is_zero() const { return sgn(value_) == 0; }

  friend DegreeTagged operator+(const DegreeTagged& a, const DegreeTagged& b);
  friend DegreeTagged operator-(const DegreeTagged& a, const DegreeTagged& b);
  friend DegreeTagged operator*(const DegreeTagged& a, const DegreeTagged& b);
  friend DegreeTagged operator-(const DegreeTagged& a) {
    return {-a.value_, a.degree_};
  }
  // Scaling by a literal keeps the degree.
  friend DegreeTagged operator*(long k, const DegreeTagged& a) {
    return {k * a.value_, a.degree_};
  }

 private:
  mpz_class value_;
  int degree_ = 0;
};

// Per-call accumulator; never shared between predicate invocations.
struct DegreeAudit {
  int max_degree = 0;
  std::size_t sign_evaluations = 0;

  void record(int degree) {
    if (degree > max_degree) max_degree = degree;
    ++sign_evaluations;
  }
};

Sign sign_of(const DegreeTagged& v, DegreeAudit& audit);

struct LinearPoly {
  DegreeTagged l1;
  DegreeTagged l0;
};

struct QuadraticPoly {
  DegreeTagged q2;
  DegreeTagged q1;
  DegreeTagged q0;

  DegreeTagged at(const DegreeTagged& v) const;
  DegreeTagged derivative_at(const DegreeTagged& v) const;
  bool is_linear() const { return q2.is_zero(); }
};

enum class BandPosition { Inside, OnBoundary, Outside };

class SignEngineError : public std::domain_error {
 public:
  enum class Code { ZeroLeadingCoefficient, NegativeDiscriminant };

  SignEngineError(Code code, const std::string& what)
      : std::domain_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Sign of L(r) for the chosen root r of Q, decided from the signs of
// Q(x*) and Q'(x*) at the root x* = -l0/l1 of L, never forming sqrt(disc).
// Degrees evaluated are at most 2*deg(l1) + deg(q2) + 2.
//
// l1 == 0 yields sign(l0). A linear Q (q2 == 0, q1 != 0) is accepted and
// its single root is used regardless of `which`.
Sign sign_linear_at_root(const LinearPoly& l, const QuadraticPoly& q,
                         RootChoice which, DegreeAudit& audit);

// sign(r - v) for the chosen root r of Q. Linear Q is accepted as above.
Sign compare_value_to_root(const DegreeTagged& v, const QuadraticPoly& q,
                           RootChoice which, DegreeAudit& audit);

// Position of v relative to the closed interval between the roots of Q.
BandPosition band_position(const DegreeTagged& v, const QuadraticPoly& q,
                           DegreeAudit& audit);

}  // namespace axincircle

#endif  // AXINCIRCLE_SIGN_ENGINE_HPP_
