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

#include "axincircle/incircle.hpp"

#include <algorithm>
#include <utility>
#include <string>

namespace axincircle {

namespace {

using DT = DegreeTagged;

DT c(const Coord& v) { return DT::coord(v); }
DT sq(const DT& v) { return v * v; }

// 3x3 determinant by cofactors along the first row.
DT det3(const DT& a, const DT& b, const DT& cc,
        const DT& d, const DT& e, const DT& f,
        const DT& g, const DT& h, const DT& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + cc * (d * h - e * g);
}

// Expansion of the lifted 4x4 incircle determinant along the query row:
//   U(x, y) = u2 (x^2 + y^2) + u1 x - w1 y - u3.
struct LiftedCircle {
  DT u2;  // degree 2
  DT u1;  // degree 3
  DT w1;  // degree 3
  DT u3;  // degree 4
};

LiftedCircle lifted(const Point& a, const Point& b, const Point& p) {
  const DT one = DT::constant(1);
  const DT xa = c(a.x), ya = c(a.y), xb = c(b.x), yb = c(b.y);
  const DT xp = c(p.x), yp = c(p.y);
  const DT na = sq(xa) + sq(ya), nb = sq(xb) + sq(yb), np = sq(xp) + sq(yp);
  return {det3(one, xa, ya, one, xb, yb, one, xp, yp),
          det3(one, ya, na, one, yb, nb, one, yp, np),
          det3(one, xa, na, one, xb, nb, one, xp, np),
          det3(xa, ya, na, xb, yb, nb, xp, yp, np)};
}

// y-extent of the circle: T(y) = t2 y^2 + t1 y + t0 with t2 < 0 vanishes
// at the lowest and highest points.
QuadraticPoly lifted_y_extent(const LiftedCircle& l) {
  return {-4 * (l.u2 * l.u2), 4 * (l.u2 * l.w1),
          l.u1 * l.u1 + 4 * (l.u2 * l.u3)};
}

[[noreturn]] void degenerate(const char* what) {
  throw IncircleError(IncircleError::Code::DegenerateConfiguration, what);
}

// Handlers are only defined on the canonical orientation.
void require_canonical(bool ok, const char* what) {
  if (!ok) {
    throw IncircleError(IncircleError::Code::UnsupportedConfiguration,
                        std::string("not canonical: ") + what);
  }
}

std::pair<Sign, Sign> endpoint_signs(Sign a, Sign b) { return {a, b}; }

bool any_negative(Sign a, Sign b) {
  return a == Sign::Negative || b == Sign::Negative;
}

// sign(|p| - |q|).
Sign compare_abs(const DT& p, const DT& q, DegreeAudit& audit) {
  const int sp = to_int(sign_of(p, audit));
  const int sq_ = to_int(sign_of(q, audit));
  return sign_of(sp * p - sq_ * q, audit);
}

}  // namespace

int degree_bound(Config c) {
  switch (c) {
    case Config::PPPP: return 4;
    case Config::PPPS: return 6;
    case Config::PPSP: return 6;
    case Config::PPSS: return 6;
    case Config::PSSP: return 4;
    case Config::PSSS: return 4;
    case Config::SSSP: return 2;
    case Config::SSSS: return 2;
  }
  return 0;
}

Sign incircle_pppp(const Point& a, const Point& b, const Point& p,
                   const Point& q, DegreeAudit& audit) {
  const LiftedCircle l = lifted(a, b, p);
  const Sign su2 = sign_of(l.u2, audit);
  if (su2 == Sign::Zero) degenerate("collinear points");
  const DT xq = c(q.x), yq = c(q.y);
  const DT u = l.u2 * (sq(xq) + sq(yq)) + l.u1 * xq - l.w1 * yq - l.u3;
  // U is positive outside a counterclockwise circle.
  return sign_of(u, audit) * su2;
}

Sign incircle_ppps(const Point& a, const Point& b, const Point& p,
                   const Segment& qs, DegreeAudit& audit) {
  require_canonical(qs.is_horizontal(), "query must be horizontal");
  const Sign sa = incircle_pppp(a, b, p, qs.a, audit);
  const Sign sb = incircle_pppp(a, b, p, qs.b, audit);
  if (any_negative(sa, sb)) return Sign::Negative;

  const LiftedCircle l = lifted(a, b, p);
  Sign line;
  switch (band_position(c(qs.a.y), lifted_y_extent(l), audit)) {
    case BandPosition::Inside: line = Sign::Negative; break;
    case BandPosition::OnBoundary: line = Sign::Zero; break;
    default: return Sign::Positive;
  }
  // 2 s2 xI + s1 has the sign of xI - xK.
  const DT s2 = -4 * (l.u2 * l.u2);
  const DT s1 = -4 * (l.u2 * l.u1);
  const Sign side_a = sign_of(2 * (s2 * c(qs.a.x)) + s1, audit);
  const Sign side_b = sign_of(2 * (s2 * c(qs.b.x)) + s1, audit);
  return combine_segment_query(line, side_a * side_b == Sign::Negative,
                               endpoint_signs(sa, sb));
}

Sign incircle_ppsp(const Point& a, const Point& b, const Segment& cd,
                   const Point& q, DegreeAudit& audit) {
  require_canonical(cd.is_horizontal(), "CD must be horizontal");
  const DT xa = c(a.x), ya = c(a.y), xb = c(b.x), yb = c(b.y);
  const DT xq = c(q.x), yq = c(q.y), yc = c(cd.a.y);

  // The disk lies on the side of the line of CD that holds A and B.
  const Sign side_a = sign_of(ya - yc, audit);
  if (sign_of(yq - yc, audit) == -side_a) return Sign::Positive;

  const Sign qa_x = sign_of(xq - xa, audit), qa_y = sign_of(yq - ya, audit);
  const Sign qb_x = sign_of(xq - xb, audit), qb_y = sign_of(yq - yb, audit);
  if ((qa_x == Sign::Zero && qa_y == Sign::Zero) ||
      (qb_x == Sign::Zero && qb_y == Sign::Zero)) {
    return Sign::Zero;
  }

  // Circles through A and B form a pencil. Inside the circle C means
  // inside the disk on Q's side of AB that C bounds there; compare C with
  // the member C_Q through Q by where each meets the line of CD.
  const LiftedCircle lq = lifted(a, b, q);
  const Sign sigma = sign_of(lq.u2, audit);
  if (sigma == Sign::Zero) {
    // Q on the line AB: inside iff strictly between A and B.
    const bool between =
        sign_of(xa - xb, audit) != Sign::Zero
            ? qa_x * qb_x == Sign::Negative
            : qa_y * qb_y == Sign::Negative;
    return between ? Sign::Negative : Sign::Positive;
  }

  // lambda compares C_Q against C on the arc left of directed AB, which
  // holds the tangency point of C. lambda = -1 when C_Q reaches strictly
  // past the line of CD there, 0 when it is tangent at that point.
  Sign lambda = Sign::Positive;
  const BandPosition band = band_position(yc, lifted_y_extent(lq), audit);
  if (band != BandPosition::Outside) {
    // Which side of AB the lowest (or highest) point of C_Q lies on, via
    // its foot M = (xK', yC) on the line of CD, xK' = -u1 / (2 u2).
    const DT m = 2 * (lq.u2 * (xb - xa) * (yc - ya)) +
                 (yb - ya) * (lq.u1 + 2 * (lq.u2 * xa));
    if (sign_of(m, audit) * sigma == Sign::Positive) {
      lambda = band == BandPosition::Inside ? Sign::Negative : Sign::Zero;
    }
  }
  // Q left of AB: Q is on C_Q, which is larger than C on that side exactly
  // when it reaches past the line. Right of AB the roles reverse.
  return sigma == Sign::Positive ? -lambda : lambda;
}

Sign incircle_ppss(const Point& a, const Point& b, const Segment& cd,
                   const Segment& qs, DegreeAudit& audit) {
  require_canonical(cd.is_horizontal(), "CD must be horizontal");
  const Sign sa = incircle_ppsp(a, b, cd, qs.a, audit);
  const Sign sb = incircle_ppsp(a, b, cd, qs.b, audit);
  if (any_negative(sa, sb)) return Sign::Negative;

  if (sign_of(c(a.y) - c(b.y), audit) != Sign::Zero) {
    const CenterDescriptor d = descriptor_pps(a, b, cd, audit);
    return generic_segment(d, cd, qs, endpoint_signs(sa, sb), audit);
  }

  // yA == yB: K = ((xA + xB) / 2, U2 / U1).
  const PpsSpecialCenter k = pps_special_center(a, b, cd);
  const DT yc = c(cd.a.y);
  const DT kc = k.u2 - k.u1 * yc;  // U1 (yK - yC)
  Sign line;
  Sign side_a, side_b;
  if (qs.is_horizontal()) {
    line = compare_abs(k.u2 - k.u1 * c(qs.a.y), kc, audit);
    if (line == Sign::Positive) return line;
    side_a = sign_of(k.xk_num2 - 2 * c(qs.a.x), audit);
    side_b = sign_of(k.xk_num2 - 2 * c(qs.b.x), audit);
  } else {
    line = compare_abs(k.u1 * (k.xk_num2 - 2 * c(qs.a.x)), 2 * kc, audit);
    if (line == Sign::Positive) return line;
    const Sign su1 = sign_of(k.u1, audit);
    side_a = sign_of(k.u2 - k.u1 * c(qs.a.y), audit) * su1;
    side_b = sign_of(k.u2 - k.u1 * c(qs.b.y), audit) * su1;
  }
  return combine_segment_query(line, side_a * side_b == Sign::Negative,
                               endpoint_signs(sa, sb));
}

namespace {

CenterDescriptor pss_descriptor(const Point& a, const Segment& cd,
                                const Segment& fg, DegreeAudit& audit) {
  require_canonical(cd.is_horizontal(), "CD must be horizontal");
  return fg.is_horizontal() ? descriptor_pss_parallel(a, cd, fg, audit)
                            : descriptor_pss_perp(a, cd, fg, audit);
}

}  // namespace

Sign incircle_pssp(const Point& a, const Segment& cd, const Segment& fg,
                   const Point& q, DegreeAudit& audit) {
  return generic_point(pss_descriptor(a, cd, fg, audit), a, q, audit);
}

Sign incircle_psss(const Point& a, const Segment& cd, const Segment& fg,
                   const Segment& qs, DegreeAudit& audit) {
  const CenterDescriptor d = pss_descriptor(a, cd, fg, audit);
  const Sign sa = generic_point(d, a, qs.a, audit);
  const Sign sb = generic_point(d, a, qs.b, audit);
  if (any_negative(sa, sb)) return Sign::Negative;
  return generic_segment(d, cd, qs, endpoint_signs(sa, sb), audit);
}

// SSS: K = (xF + (yC - yA) / 2, (yA + yC) / 2), radius |yC - yA| / 2.

Sign incircle_sssp(const Segment& ab, const Segment& cd, const Segment& fg,
                   const Point& q, DegreeAudit& audit) {
  require_canonical(ab.is_horizontal() && cd.is_horizontal() &&
                        fg.is_vertical(),
                    "AB, CD horizontal and FG vertical");
  const DT ya = c(ab.a.y), yc = c(cd.a.y), xf = c(fg.a.x);
  const DT xq = c(q.x), yq = c(q.y);
  // Beyond any of the three tangent lines, away from K.
  const Sign h = sign_of(yc - ya, audit);
  if (sign_of(yq - ya, audit) == -h) return Sign::Positive;
  if (sign_of(yq - yc, audit) == h) return Sign::Positive;
  if (sign_of(xq - xf, audit) == -h) return Sign::Positive;
  // 4 (d^2(K, Q) - radius^2).
  const DT e = 4 * ((xf - xq) * (xf - xq + yc - ya)) + sq(yc + ya - 2 * yq);
  return sign_of(e, audit);
}

Sign incircle_ssss(const Segment& ab, const Segment& cd, const Segment& fg,
                   const Segment& qs, DegreeAudit& audit) {
  require_canonical(ab.is_horizontal() && cd.is_horizontal() &&
                        fg.is_vertical(),
                    "AB, CD horizontal and FG vertical");
  const Sign sa = incircle_sssp(ab, cd, fg, qs.a, audit);
  const Sign sb = incircle_sssp(ab, cd, fg, qs.b, audit);
  if (any_negative(sa, sb)) return Sign::Negative;

  const DT ya = c(ab.a.y), yc = c(cd.a.y), xf = c(fg.a.x);
  const DT h = yc - ya;
  Sign line;
  Sign side_a, side_b;
  if (qs.is_horizontal()) {
    const DT yq = c(qs.a.y);
    line = sign_of(yq - ya, audit) * sign_of(yq - yc, audit);
    if (line == Sign::Positive) return line;
    // 2 (xK - xI).
    side_a = sign_of(2 * xf + h - 2 * c(qs.a.x), audit);
    side_b = sign_of(2 * xf + h - 2 * c(qs.b.x), audit);
  } else {
    line = compare_abs(2 * c(qs.a.x) - 2 * xf - h, h, audit);
    if (line == Sign::Positive) return line;
    // 2 (yK - yI).
    side_a = sign_of(ya + yc - 2 * c(qs.a.y), audit);
    side_b = sign_of(ya + yc - 2 * c(qs.b.y), audit);
  }
  return combine_segment_query(line, side_a * side_b == Sign::Negative,
                               endpoint_signs(sa, sb));
}

NormalizedInstance normalize_instance(const Site& s1, const Site& s2,
                                      const Site& s3, const Site& query) {
  std::array<Site, 3> s = {s1, s2, s3};
  Site q = query;
  for (const Site* site : {&s1, &s2, &s3, &query}) {
    if (site->is_segment() && !site->segment().axis()) {
      throw IncircleError(IncircleError::Code::UnsupportedConfiguration,
                          "segment is not axis-aligned");
    }
  }

  auto rotate_until = [&s](auto pred) {
    for (int i = 0; i < 3 && !pred(); ++i) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
    }
  };
  auto reflect_all = [&s, &q] {
    s = {reflect_site(s[1]), reflect_site(s[0]), reflect_site(s[2])};
    q = reflect_site(q);
  };
  auto quarter_turn = [&s, &q] {
    for (Site& site : s) site = rotate_site(site);
    q = rotate_site(q);
  };
  auto vertical = [](const Site& site) {
    return site.is_segment() && site.segment().is_vertical();
  };

  const int segments = int(s[0].is_segment()) + int(s[1].is_segment()) +
                       int(s[2].is_segment());
  switch (segments) {
    case 0:
      if (vertical(q)) reflect_all();
      break;
    case 1:
      rotate_until([&s] { return s[2].is_segment(); });
      if (vertical(s[2])) reflect_all();
      break;
    case 2:
      rotate_until([&s] { return s[0].is_point(); });
      if (vertical(s[1])) {
        if (vertical(s[2])) {
          reflect_all();
          rotate_until([&s] { return s[0].is_point(); });
        } else {
          quarter_turn();
        }
      }
      break;
    default: {
      const bool v0 = vertical(s[0]), v1 = vertical(s[1]),
                 v2 = vertical(s[2]);
      if (v0 == v1 && v1 == v2) {
        throw IncircleError(IncircleError::Code::UnsupportedConfiguration,
                            "three parallel segments");
      }
      // Bring the segment whose orientation is unique to the last slot.
      const int odd = v0 == v1 ? 2 : (v0 == v2 ? 1 : 0);
      for (int i = 0; i < (odd + 1) % 3; ++i) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
      }
      if (vertical(s[0])) reflect_all();
      break;
    }
  }
  return {config_of(s[0], s[1], s[2], q), s, q};
}

AuditedSign incircle_audited(const Site& s1, const Site& s2, const Site& s3,
                             const Site& query) {
  const NormalizedInstance n = normalize_instance(s1, s2, s3, query);
  const auto& s = n.sites;
  DegreeAudit audit;
  Sign r = Sign::Zero;
  switch (n.config) {
    case Config::PPPP:
      r = incircle_pppp(s[0].point(), s[1].point(), s[2].point(),
                        n.query.point(), audit);
      break;
    case Config::PPPS:
      r = incircle_ppps(s[0].point(), s[1].point(), s[2].point(),
                        n.query.segment(), audit);
      break;
    case Config::PPSP:
      r = incircle_ppsp(s[0].point(), s[1].point(), s[2].segment(),
                        n.query.point(), audit);
      break;
    case Config::PPSS:
      r = incircle_ppss(s[0].point(), s[1].point(), s[2].segment(),
                        n.query.segment(), audit);
      break;
    case Config::PSSP:
      r = incircle_pssp(s[0].point(), s[1].segment(), s[2].segment(),
                        n.query.point(), audit);
      break;
    case Config::PSSS:
      r = incircle_psss(s[0].point(), s[1].segment(), s[2].segment(),
                        n.query.segment(), audit);
      break;
    case Config::SSSP:
      r = incircle_sssp(s[0].segment(), s[1].segment(), s[2].segment(),
                        n.query.point(), audit);
      break;
    case Config::SSSS:
      r = incircle_ssss(s[0].segment(), s[1].segment(), s[2].segment(),
                        n.query.segment(), audit);
      break;
  }
  return {r, audit.max_degree, n.config};
}

Sign incircle(const Site& s1, const Site& s2, const Site& s3,
              const Site& query) {
  return incircle_audited(s1, s2, s3, query).sign;
}

}  // namespace axincircle
