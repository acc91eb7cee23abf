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

#include "axincircle/center_descriptor.hpp"

namespace axincircle {

namespace {

using DT = DegreeTagged;

DT c(const Coord& v) { return DT::coord(v); }
DT k(long v) { return DT::constant(v); }
DT sq(const DT& v) { return v * v; }

void require_nonzero(Sign s, const char* what) {
  if (s == Sign::Zero) {
    throw IncircleError(IncircleError::Code::DegenerateConfiguration, what);
  }
}

}  // namespace

CenterDescriptor descriptor_pps(const Point& a, const Point& b,
                                const Segment& cd, DegreeAudit& audit) {
  const DT xa = c(a.x), ya = c(a.y), xb = c(b.x), yb = c(b.y);
  const DT yc = c(cd.a.y);
  const Sign ab = sign_of(ya - yb, audit);
  require_nonzero(ab, "PPS center needs yA != yB");

  CenterDescriptor d;
  // AB bisector: beta y = alpha1 x + alpha0.
  d.alpha1 = 2 * (xa - xb);
  d.alpha0 = sq(xb) + sq(yb) - sq(xa) - sq(ya);
  d.beta = 2 * (yb - ya);

  // beta * [(x - xA)^2 - (yA - yC)(2y - yA - yC)] with y taken from the
  // bisector.
  const DT h = ya - yc;
  d.x_poly.q2 = d.beta;
  d.x_poly.q1 = -2 * (d.beta * xa) - 2 * (d.alpha1 * h);
  d.x_poly.q0 = d.beta * sq(xa) - h * (2 * d.alpha0 - d.beta * (ya + yc));

  const DT dx = xa - xb;
  d.y_poly.q2 = 4 * sq(yb - ya);
  d.y_poly.q1 = 4 * ((2 * yc - ya - yb) * sq(xb - xa)) +
                4 * ((yb - ya) * (sq(ya) - sq(yb)));
  d.y_poly.q0 = sq(dx) * (2 * sq(ya) + 2 * sq(yb) - 4 * sq(yc) + sq(dx)) +
                sq(sq(ya) - sq(yb));

  // Root of P by the vertical order of A, B and the line of CD.
  const Sign ac = sign_of(ya - yc, audit);
  const Sign bc = sign_of(yb - yc, audit);
  if (ac == Sign::Positive && bc == Sign::Positive) {
    // yC < yA < yB -> x1, yC < yB < yA -> x2.
    d.x_choice = ab == Sign::Negative ? RootChoice::Lower : RootChoice::Upper;
  } else {
    // yB < yA < yC -> x2, yA < yB < yC -> x1.
    d.x_choice = ab == Sign::Positive ? RootChoice::Upper : RootChoice::Lower;
  }
  // xA == xB gives a double root of T; either choice is exact.
  d.y_choice = sign_of(xa - xb, audit) == Sign::Negative ? RootChoice::Upper
                                                         : RootChoice::Lower;
  return d;
}

PpsSpecialCenter pps_special_center(const Point& a, const Point& b,
                                    const Segment& cd) {
  const DT xa = c(a.x), ya = c(a.y), xb = c(b.x);
  const DT yc = c(cd.a.y);
  return {xa + xb, sq(xb - xa) + 4 * (sq(ya) - sq(yc)), 8 * (ya - yc)};
}

CenterDescriptor descriptor_pss_parallel(const Point& a, const Segment& cd,
                                         const Segment& fg,
                                         DegreeAudit& audit) {
  const DT xa = c(a.x), ya = c(a.y);
  const DT yc = c(cd.a.y), yf = c(fg.a.y);
  const Sign ac = sign_of(ya - yc, audit);
  require_nonzero(ac, "point on the line of CD");
  require_nonzero(sign_of(ya - yf, audit), "point on the line of FG");

  CenterDescriptor d;
  d.x_poly.q2 = k(1);
  d.x_poly.q1 = -2 * xa;
  d.x_poly.q0 = sq(xa) + (ya - yc) * (ya - yf);
  d.x_choice = ac == Sign::Positive ? RootChoice::Upper : RootChoice::Lower;

  // yK is the midline: T(y) = 2y - (yC + yF).
  d.y_poly.q2 = k(0);
  d.y_poly.q1 = k(2);
  d.y_poly.q0 = -(yc + yf);
  d.y_choice = RootChoice::Lower;

  d.alpha1 = k(0);
  d.alpha0 = yc + yf;
  d.beta = k(2);
  return d;
}

CenterDescriptor descriptor_pss_perp(const Point& a, const Segment& cd,
                                     const Segment& fg, DegreeAudit& audit) {
  const DT xa = c(a.x), ya = c(a.y);
  const DT yc = c(cd.a.y), xf = c(fg.a.x);
  const Sign sx = sign_of(xa - xf, audit);
  const Sign sy = sign_of(ya - yc, audit);
  require_nonzero(sx, "point on the line of FG");
  require_nonzero(sy, "point on the line of CD");

  CenterDescriptor d;
  d.x_poly.q2 = k(1);
  d.y_poly.q2 = k(1);
  d.beta = k(1);
  if (sx == sy) {
    // K on y = x + yC - xF.
    d.x_poly.q1 = 2 * (yc - ya - xa);
    d.x_poly.q0 = sq(yc - ya) + sq(xa) - 2 * (xf * (yc - ya));
    d.y_poly.q1 = 2 * (xf - xa - ya);
    d.y_poly.q0 = sq(xf - xa - yc) + sq(ya) - sq(yc);
    d.alpha1 = k(1);
    d.alpha0 = yc - xf;
  } else {
    // K on y = -x + yC + xF.
    d.x_poly.q1 = 2 * (ya - yc - xa);
    d.x_poly.q0 = sq(yc - ya) + sq(xa) + 2 * (xf * (yc - ya));
    d.y_poly.q1 = 2 * (xa - ya - xf);
    d.y_poly.q0 = sq(xa - xf) + sq(ya) - 2 * (xa * yc) + 2 * (yc * xf);
    d.alpha1 = k(-1);
    d.alpha0 = yc + xf;
  }
  d.x_choice = sy == Sign::Positive ? RootChoice::Upper : RootChoice::Lower;
  d.y_choice = sx == Sign::Positive ? RootChoice::Upper : RootChoice::Lower;
  return d;
}

Sign generic_point(const CenterDescriptor& d, const Point& a, const Point& q,
                   DegreeAudit& audit) {
  const DT xa = c(a.x), ya = c(a.y), xq = c(q.x), yq = c(q.y);
  // beta (d^2(K,Q) - d^2(K,A)) = -I1 xK + I0.
  const DT i1 = 2 * (d.beta * (xq - xa)) + 2 * (d.alpha1 * (yq - ya));
  const DT i0 = d.beta * (sq(xq) + sq(yq) - sq(xa) - sq(ya)) -
                2 * (d.alpha0 * (yq - ya));
  const Sign sb = sign_of(d.beta, audit);
  return sb * sign_linear_at_root({-i1, i0}, d.x_poly, d.x_choice, audit);
}

Sign combine_segment_query(Sign line, bool straddle,
                           std::pair<Sign, Sign> endpoint_signs) {
  if (endpoint_signs.first == Sign::Negative ||
      endpoint_signs.second == Sign::Negative) {
    return Sign::Negative;
  }
  if (line == Sign::Positive) return Sign::Positive;
  // The line meets the circle. The closed segment reaches the open chord
  // (secant) or the tangency point exactly when it straddles the foot of K;
  // otherwise it can only touch the circle at an endpoint.
  if (straddle) return line == Sign::Negative ? Sign::Negative : Sign::Zero;
  const bool touches = endpoint_signs.first == Sign::Zero ||
                       endpoint_signs.second == Sign::Zero;
  return touches ? Sign::Zero : Sign::Positive;
}

Sign generic_segment(const CenterDescriptor& d, const Segment& cd,
                     const Segment& qs, std::pair<Sign, Sign> endpoint_signs,
                     DegreeAudit& audit) {
  if (endpoint_signs.first == Sign::Negative ||
      endpoint_signs.second == Sign::Negative) {
    return Sign::Negative;
  }
  const DT yc = c(cd.a.y);
  // d(K, CD) = |yK - yC| since CD is horizontal and tangent.
  const Sign kc = compare_value_to_root(yc, d.y_poly, d.y_choice, audit);
  const bool kc_nonneg = kc != Sign::Negative;

  Sign line;
  if (qs.is_horizontal()) {
    const DT yq = c(qs.a.y);
    const bool kq_nonneg =
        compare_value_to_root(yq, d.y_poly, d.y_choice, audit) !=
        Sign::Negative;
    // |yK - yQ| - |yK - yC| = J1 yK + J0.
    LinearPoly j;
    if (kq_nonneg && kc_nonneg) {
      j = {k(0), yc - yq};
    } else if (kq_nonneg) {
      j = {k(2), -yq - yc};
    } else if (kc_nonneg) {
      j = {k(-2), yq + yc};
    } else {
      j = {k(0), yq - yc};
    }
    line = sign_linear_at_root(j, d.y_poly, d.y_choice, audit);
  } else {
    const DT xq = c(qs.a.x);
    const bool kq_nonneg =
        compare_value_to_root(xq, d.x_poly, d.x_choice, audit) !=
        Sign::Negative;
    // beta (|xK - xQ| - |yK - yC|) = L1 xK + L0.
    LinearPoly l;
    if (kq_nonneg && kc_nonneg) {
      l = {d.beta - d.alpha1, d.beta * (yc - xq) - d.alpha0};
    } else if (kq_nonneg) {
      l = {d.alpha1 + d.beta, d.beta * (-yc - xq) + d.alpha0};
    } else if (kc_nonneg) {
      l = {-d.alpha1 - d.beta, d.beta * (yc + xq) - d.alpha0};
    } else {
      l = {d.alpha1 - d.beta, d.beta * (xq - yc) + d.alpha0};
    }
    line = sign_of(d.beta, audit) *
           sign_linear_at_root(l, d.x_poly, d.x_choice, audit);
  }
  if (line == Sign::Positive) return Sign::Positive;

  // Position of the endpoints against the perpendicular through K.
  Sign side_a, side_b;
  if (qs.is_horizontal()) {
    side_a = compare_value_to_root(c(qs.a.x), d.x_poly, d.x_choice, audit);
    side_b = compare_value_to_root(c(qs.b.x), d.x_poly, d.x_choice, audit);
  } else {
    side_a = compare_value_to_root(c(qs.a.y), d.y_poly, d.y_choice, audit);
    side_b = compare_value_to_root(c(qs.b.y), d.y_poly, d.y_choice, audit);
  }
  return combine_segment_query(line, side_a * side_b == Sign::Negative,
                               endpoint_signs);
}

}  // namespace axincircle
