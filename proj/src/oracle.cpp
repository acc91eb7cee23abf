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

#include "axincircle/oracle.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace axincircle {

namespace {

// Squared distance to the supporting point or line of a site:
//   ex x^2 + ey y^2 + gx x + gy y + h.
struct DistanceFn {
  int ex = 0;
  int ey = 0;
  mpq_class gx, gy, h;

  QuadExt at(const QuadExt& x, const QuadExt& y) const {
    QuadExt r = QuadExt(gx) * x + QuadExt(gy) * y + QuadExt(h);
    if (ex) r = r + x * x;
    if (ey) r = r + y * y;
    return r;
  }
};

DistanceFn distance_fn(const Site& s) {
  DistanceFn f;
  if (s.is_point()) {
    const Point& p = s.point();
    f.ex = f.ey = 1;
    f.gx = -2 * p.x;
    f.gy = -2 * p.y;
    f.h = p.x * p.x + p.y * p.y;
  } else if (s.segment().is_horizontal()) {
    const Coord& c = s.segment().a.y;
    f.ey = 1;
    f.gy = -2 * c;
    f.h = c * c;
  } else {
    const Coord& c = s.segment().a.x;
    f.ex = 1;
    f.gx = -2 * c;
    f.h = c * c;
  }
  return f;
}

// a x + b y + e = 0, parametrized as (x0 + t dx, y0 + t dy).
struct Line {
  mpq_class x0, dx, y0, dy;
};

std::optional<Line> make_line(const mpq_class& a, const mpq_class& b,
                              const mpq_class& e) {
  if (b != 0) return Line{0, 1, -e / b, -a / b};
  if (a != 0) return Line{-e / a, 0, 0, 1};
  return std::nullopt;
}

// Lines on which f == g.
std::vector<Line> equidistance_lines(const DistanceFn& f,
                                     const DistanceFn& g) {
  std::vector<Line> out;
  if (f.ex == g.ex && f.ey == g.ey) {
    if (auto l = make_line(f.gx - g.gx, f.gy - g.gy, f.h - g.h)) {
      out.push_back(*l);
    }
  } else if (f.ex + f.ey == 1 && g.ex + g.ey == 1) {
    // (y - c)^2 = (x - c')^2 for a horizontal and a vertical line.
    const DistanceFn& hz = f.ey ? f : g;
    const DistanceFn& vt = f.ey ? g : f;
    const mpq_class c = -hz.gy / 2, cp = -vt.gx / 2;
    out.push_back(*make_line(1, -1, c - cp));  // x - y = cp - c
    out.push_back(*make_line(1, 1, -c - cp));  // x + y = cp + c
  }
  return out;
}

// f restricted to the line as a quadratic in t.
std::array<mpq_class, 3> along(const DistanceFn& f, const Line& l) {
  std::array<mpq_class, 3> q;
  q[2] = f.ex * l.dx * l.dx + f.ey * l.dy * l.dy;
  q[1] = 2 * f.ex * l.x0 * l.dx + 2 * f.ey * l.y0 * l.dy + f.gx * l.dx +
         f.gy * l.dy;
  q[0] = f.ex * l.x0 * l.x0 + f.ey * l.y0 * l.y0 + f.gx * l.x0 +
         f.gy * l.y0 + f.h;
  return q;
}

bool same_value(const QuadExt& u, const QuadExt& v) {
  try {
    return u == v;
  } catch (const MixedDiscriminant&) {
    // Distinct fields meet only if both irrational parts agree.
    return u.a() == v.a() && sgn(u.b()) == sgn(v.b()) &&
           u.b() * u.b() * u.d() == v.b() * v.b() * v.d();
  }
}

OraclePoint tangency_point(const Site& s, const OraclePoint& k) {
  if (s.is_point()) return {s.point().x, s.point().y};
  const Segment& g = s.segment();
  if (g.is_horizontal()) return {k.x, g.a.y};
  return {g.a.x, k.y};
}

bool strictly_between(const QuadExt& v, const Coord& u, const Coord& w) {
  const Sign a = (v - QuadExt(u)).sign();
  const Sign b = (v - QuadExt(w)).sign();
  return a * b == Sign::Negative;
}

bool foot_inside(const Site& s, const OraclePoint& t) {
  if (s.is_point()) return true;
  const Segment& g = s.segment();
  if (g.is_horizontal()) return strictly_between(t.x, g.a.x, g.b.x);
  return strictly_between(t.y, g.a.y, g.b.y);
}

Sign orientation(const OraclePoint& p, const OraclePoint& q,
                 const OraclePoint& r) {
  return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).sign();
}

}  // namespace

OracleCircle oracle_circle(const Site& s1, const Site& s2, const Site& s3) {
  const std::array<Site, 3> sites = {s1, s2, s3};
  std::array<DistanceFn, 3> f;
  for (int i = 0; i < 3; ++i) f[i] = distance_fn(sites[i]);

  // Pick the pair with the fewest equidistance lines.
  const std::array<std::pair<int, int>, 3> pairs = {
      std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}};
  std::vector<Line> lines;
  int chosen = -1;
  for (int p = 0; p < 3; ++p) {
    auto ls = equidistance_lines(f[pairs[p].first], f[pairs[p].second]);
    if (!ls.empty() && (chosen < 0 || ls.size() < lines.size())) {
      lines = std::move(ls);
      chosen = p;
    }
  }
  if (chosen < 0) {
    throw OracleError(OracleError::Code::NoValidCircle,
                      "no pair of sites with a linear bisector");
  }

  std::vector<OracleCircle> found;
  for (const Line& l : lines) {
    // Intersect with the bisector of another pair.
    std::vector<QuadExt> ts;
    for (int p = 0; p < 3; ++p) {
      if (p == chosen) continue;
      auto u = along(f[pairs[p].first], l);
      auto v = along(f[pairs[p].second], l);
      const mpq_class q2 = u[2] - v[2], q1 = u[1] - v[1], q0 = u[0] - v[0];
      if (q2 != 0) {
        QuadraticRoots r = solve_quadratic(q2, q1, q0);
        if (r.count >= 1) ts.push_back(r.lower);
        if (r.count == 2) ts.push_back(r.upper);
      } else if (q1 != 0) {
        ts.push_back(QuadExt(-q0 / q1));
      } else if (q0 != 0) {
        // Parallel to this line: no intersection.
      } else {
        continue;  // identical on the line; try the other pair
      }
      break;
    }
    for (const QuadExt& t : ts) {
      OracleCircle c;
      c.center = {QuadExt(l.x0) + QuadExt(l.dx) * t,
                  QuadExt(l.y0) + QuadExt(l.dy) * t};
      const QuadExt d0 = f[0].at(c.center.x, c.center.y);
      if (!(f[1].at(c.center.x, c.center.y) == d0) ||
          !(f[2].at(c.center.x, c.center.y) == d0)) {
        continue;
      }
      if (d0.sign() != Sign::Positive) continue;
      c.radius2 = d0;
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        c.tangency[i] = tangency_point(sites[i], c.center);
        ok = foot_inside(sites[i], c.tangency[i]);
      }
      if (!ok) continue;
      if (orientation(c.tangency[0], c.tangency[1], c.tangency[2]) !=
          Sign::Positive) {
        continue;
      }
      bool duplicate = false;
      for (const OracleCircle& e : found) {
        duplicate = duplicate || (same_value(e.center.x, c.center.x) &&
                                  same_value(e.center.y, c.center.y));
      }
      if (!duplicate) found.push_back(std::move(c));
    }
  }
  if (found.empty()) {
    throw OracleError(OracleError::Code::NoValidCircle,
                      "no circle with counterclockwise tangencies");
  }
  if (found.size() > 1) {
    throw OracleError(OracleError::Code::AmbiguousCircle,
                      std::to_string(found.size()) + " candidate circles");
  }
  return found.front();
}

Sign oracle_incircle(const OracleCircle& circle, const Site& query) {
  const OraclePoint& k = circle.center;
  QuadExt nx, ny;
  if (query.is_point()) {
    nx = QuadExt(query.point().x);
    ny = QuadExt(query.point().y);
  } else {
    // Nearest point of the closed segment: clamp K onto it.
    const Segment& g = query.segment();
    auto clamp = [](const QuadExt& v, const Coord& u, const Coord& w) {
      const Coord& lo = u < w ? u : w;
      const Coord& hi = u < w ? w : u;
      if ((v - QuadExt(lo)).sign() == Sign::Negative) return QuadExt(lo);
      if ((v - QuadExt(hi)).sign() == Sign::Positive) return QuadExt(hi);
      return v;
    };
    if (g.is_horizontal()) {
      nx = clamp(k.x, g.a.x, g.b.x);
      ny = QuadExt(g.a.y);
    } else {
      nx = QuadExt(g.a.x);
      ny = clamp(k.y, g.a.y, g.b.y);
    }
  }
  const QuadExt dx = nx - k.x, dy = ny - k.y;
  return (dx * dx + dy * dy - circle.radius2).sign();
}

Sign oracle_incircle(const Site& s1, const Site& s2, const Site& s3,
                     const Site& query) {
  return oracle_incircle(oracle_circle(s1, s2, s3), query);
}

bool circle_exists(const Site& s1, const Site& s2, const Site& s3) {
  try {
    oracle_circle(s1, s2, s3);
    return true;
  } catch (const OracleError&) {
    return false;
  }
}

RootChoice which_root(const mpz_class& q2, const mpz_class& q1,
                      const mpz_class& q0, const QuadExt& r) {
  const QuadExt value = (QuadExt(q2) * r + QuadExt(q1)) * r + QuadExt(q0);
  if (value.sign() != Sign::Zero) throw std::domain_error("not a root");
  // Q' < 0 at the lower root, > 0 at the upper one (for q2 > 0).
  const Sign slope = (QuadExt(mpz_class(2 * q2)) * r + QuadExt(q1)).sign() *
                     sign_of_value(q2);
  return slope == Sign::Positive ? RootChoice::Upper : RootChoice::Lower;
}

}  // namespace axincircle
