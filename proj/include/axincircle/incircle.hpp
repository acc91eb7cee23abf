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

// Incircle predicate for Voronoi diagrams of points and axis-aligned
// segments.
//
// Let C be the circle through or tangent to s1, s2, s3 such that the
// tangency points are met in counterclockwise order. incircle() returns
//
//   +1  the query is disjoint from the closed disk of C,
//    0  the query touches C without meeting its interior,
//   -1  the query meets the open disk.
//
// Site segments are open, the query segment is closed. Every sign is
// exact and every evaluated expression has degree at most 6.

#ifndef AXINCIRCLE_INCIRCLE_HPP_
#define AXINCIRCLE_INCIRCLE_HPP_

#include <array>

#include "axincircle/center_descriptor.hpp"
#include "axincircle/geom.hpp"
#include "axincircle/sign_engine.hpp"

namespace axincircle {

// Largest degree each configuration may evaluate.
int degree_bound(Config c);

// Canonical form expected by the per-case handlers:
//   PPP*  query segment (if any) horizontal
//   PPS*  sites (A, B, CD) with CD horizontal
//   PSS*  sites (A, CD, FG) with CD horizontal
//   SSS*  sites (AB, CD, FG) with AB, CD horizontal and FG vertical
// Reached by cyclic rotation, reflection through y = x (which also swaps
// the first two sites) and a quarter turn.
struct NormalizedInstance {
  Config config;
  std::array<Site, 3> sites;
  Site query;
};

NormalizedInstance normalize_instance(const Site& s1, const Site& s2,
                                      const Site& s3, const Site& query);

// Handlers for canonical inputs.
Sign incircle_pppp(const Point& a, const Point& b, const Point& c,
                   const Point& q, DegreeAudit& audit);
Sign incircle_ppps(const Point& a, const Point& b, const Point& c,
                   const Segment& qs, DegreeAudit& audit);
Sign incircle_ppsp(const Point& a, const Point& b, const Segment& cd,
                   const Point& q, DegreeAudit& audit);
Sign incircle_ppss(const Point& a, const Point& b, const Segment& cd,
                   const Segment& qs, DegreeAudit& audit);
Sign incircle_pssp(const Point& a, const Segment& cd, const Segment& fg,
                   const Point& q, DegreeAudit& audit);
Sign incircle_psss(const Point& a, const Segment& cd, const Segment& fg,
                   const Segment& qs, DegreeAudit& audit);
Sign incircle_sssp(const Segment& ab, const Segment& cd, const Segment& fg,
                   const Point& q, DegreeAudit& audit);
Sign incircle_ssss(const Segment& ab, const Segment& cd, const Segment& fg,
                   const Segment& qs, DegreeAudit& audit);

struct AuditedSign {
  Sign sign;
  int max_degree;
  Config config;
};

// Inputs must pass validate_instance() and admit a circle.
Sign incircle(const Site& s1, const Site& s2, const Site& s3,
              const Site& query);
AuditedSign incircle_audited(const Site& s1, const Site& s2, const Site& s3,
                             const Site& query);

}  // namespace axincircle

#endif  // AXINCIRCLE_INCIRCLE_HPP_
