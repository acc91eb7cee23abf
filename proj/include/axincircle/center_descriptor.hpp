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

// Implicit description of a Voronoi center K = (xK, yK) for circles
// defined by at least one point and at least one segment:
//
//   xK is the `x_choice` root of P(x),
//   yK is the `y_choice` root of T(y)   (T may be linear),
//   beta * yK = alpha1 * xK + alpha0.
//
// The generic engine answers incircle queries against such a center
// without ever forming a square root.

#ifndef AXINCIRCLE_CENTER_DESCRIPTOR_HPP_
#define AXINCIRCLE_CENTER_DESCRIPTOR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

#include "axincircle/geom.hpp"
#include "axincircle/sign_engine.hpp"

namespace axincircle {

class IncircleError : public std::runtime_error {
 public:
  enum class Code { UnsupportedConfiguration, DegenerateConfiguration };

  IncircleError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

struct CenterDescriptor {
  QuadraticPoly x_poly;
  RootChoice x_choice = RootChoice::Lower;
  QuadraticPoly y_poly;
  RootChoice y_choice = RootChoice::Lower;
  DegreeTagged alpha1;
  DegreeTagged alpha0;
  DegreeTagged beta;
};

// Two points A, B and a horizontal segment CD with yA != yB. The center is
// the intersection of the AB bisector with the parabola of focus A and
// directrix the line of CD.
CenterDescriptor descriptor_pps(const Point& a, const Point& b,
                                const Segment& cd, DegreeAudit& audit);

// yA == yB: xK = (xA + xB) / 2 and yK = U2 / U1.
struct PpsSpecialCenter {
  DegreeTagged xk_num2;  // 2 xK
  DegreeTagged u2;
  DegreeTagged u1;
};
PpsSpecialCenter pps_special_center(const Point& a, const Point& b,
                                    const Segment& cd);

// Point A strictly between two horizontal lines CD and FG.
CenterDescriptor descriptor_pss_parallel(const Point& a, const Segment& cd,
                                         const Segment& fg,
                                         DegreeAudit& audit);

// Point A, horizontal CD and vertical FG. K lies on the bisector of the
// quadrant pair containing A: y = x + yC - xF when (xA - xF) and (yA - yC)
// agree in sign, y = -x + yC + xF otherwise.
CenterDescriptor descriptor_pss_perp(const Point& a, const Segment& cd,
                                     const Segment& fg, DegreeAudit& audit);

// sign(d^2(K, Q) - d^2(K, A)) for a point site A on the circle.
Sign generic_point(const CenterDescriptor& d, const Point& a, const Point& q,
                   DegreeAudit& audit);

// Segment query QS against a circle tangent to the horizontal segment CD.
// `endpoint_signs` are the point-query signs of QS.a and QS.b.
Sign generic_segment(const CenterDescriptor& d, const Segment& cd,
                     const Segment& qs, std::pair<Sign, Sign> endpoint_signs,
                     DegreeAudit& audit);

// Shared final step of every segment query once neither endpoint is inside.
// `line` is the sign of d(K, line of QS) - radius, `straddle` whether the
// endpoints lie strictly on both sides of the perpendicular through K.
Sign combine_segment_query(Sign line, bool straddle,
                           std::pair<Sign, Sign> endpoint_signs);

}  // namespace axincircle

#endif  // AXINCIRCLE_CENTER_DESCRIPTOR_HPP_
