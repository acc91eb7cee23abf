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

#include "axincircle/sign_engine.hpp"

namespace axincircle {

namespace {

void check_homogeneous(const DegreeTagged& a, const DegreeTagged& b) {
#ifndef AXINCIRCLE_NO_DEGREE_CHECKS
  if (a.degree() != b.degree()) {
    throw InhomogeneousExpression("sum of degree " +
                                  std::to_string(a.degree()) + " and " +
                                  std::to_string(b.degree()) + " terms");
  }
#else
  (void)a;
  (void)b;
#endif
}

void require_real_roots(const QuadraticPoly& q) {
  if (q.is_linear()) {
    if (q.q1.is_zero()) {
      throw SignEngineError(SignEngineError::Code::ZeroLeadingCoefficient,
                            "polynomial has no leading coefficient");
    }
    return;
  }
  // Precondition only: not part of the decision procedure, not audited.
  mpz_class disc = q.q1.value() * q.q1.value() -
                   4 * q.q2.value() * q.q0.value();
  if (sgn(disc) < 0) {
    throw SignEngineError(SignEngineError::Code::NegativeDiscriminant,
                          "quadratic has no real roots");
  }
}

// Where a value v sits relative to the roots x1 <= x2, given
// s = sign(Q(v)) * sign(q2) and d = sign(Q'(v)) * sign(q2).
// Returns sign(r - v) for the chosen root r.
Sign root_minus_value(Sign s, Sign d, RootChoice which) {
  const bool upper = which == RootChoice::Upper;
  if (s == Sign::Negative) {
    // x1 < v < x2.
    return upper ? Sign::Positive : Sign::Negative;
  }
  if (s == Sign::Positive) {
    // Both roots on the same side of v; Q' points away from them.
    if (d == Sign::Negative) return Sign::Positive;
    if (d == Sign::Positive) return Sign::Negative;
    throw SignEngineError(SignEngineError::Code::NegativeDiscriminant,
                          "value at vertex above the axis");
  }
  // v is a root: Q' < 0 at x1, Q' > 0 at x2, Q' = 0 at a double root.
  if (d == Sign::Negative) return upper ? Sign::Positive : Sign::Zero;
  if (d == Sign::Positive) return upper ? Sign::Zero : Sign::Negative;
  return Sign::Zero;
}

}  // namespace

DegreeTagged operator+(const DegreeTagged& a, const DegreeTagged& b) {
  check_homogeneous(a, b);
  return {a.value_ + b.value_, std::max(a.degree_, b.degree_)};
}

DegreeTagged operator-(const DegreeTagged& a, const DegreeTagged& b) {
  check_homogeneous(a, b);
  return {a.value_ - b.value_, std::max(a.degree_, b.degree_)};
}

DegreeTagged operator*(const DegreeTagged& a, const DegreeTagged& b) {
  return {a.value_ * b.value_, a.degree_ + b.degree_};
}

Sign sign_of(const DegreeTagged& v, DegreeAudit& audit) {
  audit.record(v.degree());
  return sign_of_value(v.value());
}

DegreeTagged QuadraticPoly::at(const DegreeTagged& v) const {
  return (q2 * v + q1) * v + q0;
}

DegreeTagged QuadraticPoly::derivative_at(const DegreeTagged& v) const {
  return 2 * q2 * v + q1;
}

Sign sign_linear_at_root(const LinearPoly& l, const QuadraticPoly& q,
                         RootChoice which, DegreeAudit& audit) {
  require_real_roots(q);
  const Sign sl1 = sign_of(l.l1, audit);
  if (sl1 == Sign::Zero) return sign_of(l.l0, audit);

  if (q.is_linear()) {
    // Root -q0/q1: L(r) = (l0*q1 - l1*q0) / q1.
    return sign_of(l.l0 * q.q1 - l.l1 * q.q0, audit) * sign_of(q.q1, audit);
  }

  // With x* = -l0/l1:  l1^2 Q(x*) = l1^2 q0 - l1 q1 l0 + q2 l0^2  and
  // l1 Q'(x*) = l1 q1 - 2 q2 l0.  L(r) = l1 (r - x*).
  const Sign sq2 = sign_of(q.q2, audit);
  const Sign s =
      sign_of(l.l1 * l.l1 * q.q0 - l.l1 * q.q1 * l.l0 + q.q2 * l.l0 * l.l0,
              audit) * sq2;
  Sign d = Sign::Zero;
  if (s != Sign::Negative) {
    d = sign_of(l.l1 * q.q1 - 2 * q.q2 * l.l0, audit) * sl1 * sq2;
  }
  return root_minus_value(s, d, which) * sl1;
}

Sign compare_value_to_root(const DegreeTagged& v, const QuadraticPoly& q,
                           RootChoice which, DegreeAudit& audit) {
  require_real_roots(q);
  if (q.is_linear()) {
    // r = -q0/q1, so r - v = -(q1 v + q0) / q1.
    return -(sign_of(q.q1 * v + q.q0, audit) * sign_of(q.q1, audit));
  }
  const Sign sq2 = sign_of(q.q2, audit);
  const Sign s = sign_of(q.at(v), audit) * sq2;
  Sign d = Sign::Zero;
  if (s != Sign::Negative) d = sign_of(q.derivative_at(v), audit) * sq2;
  return root_minus_value(s, d, which);
}

BandPosition band_position(const DegreeTagged& v, const QuadraticPoly& q,
                           DegreeAudit& audit) {
  if (q.is_linear()) {
    throw SignEngineError(SignEngineError::Code::ZeroLeadingCoefficient,
                          "band test needs a quadratic");
  }
  const Sign s = sign_of(q.at(v), audit);
  if (s == Sign::Zero) return BandPosition::OnBoundary;
  return s == -sign_of(q.q2, audit) ? BandPosition::Inside
                                    : BandPosition::Outside;
}

}  // namespace axincircle
