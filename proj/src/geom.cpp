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

#include "axincircle/geom.hpp"

#include <utility>

namespace axincircle {

std::optional<Axis> Segment::axis() const {
  if (a.y == b.y && a.x != b.x) return Axis::Horizontal;
  if (a.x == b.x && a.y != b.y) return Axis::Vertical;
  return std::nullopt;
}

std::string_view to_string(Config c) {
  switch (c) {
    case Config::PPPP: return "PPPP";
    case Config::PPPS: return "PPPS";
    case Config::PPSP: return "PPSP";
    case Config::PPSS: return "PPSS";
    case Config::PSSP: return "PSSP";
    case Config::PSSS: return "PSSS";
    case Config::SSSP: return "SSSP";
    case Config::SSSS: return "SSSS";
  }
  return "?";
}

std::optional<Config> parse_config(std::string_view s) {
  for (Config c : kAllConfigs) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

Config config_of(const Site& s1, const Site& s2, const Site& s3,
                 const Site& query) {
  const int segments = int(s1.is_segment()) + int(s2.is_segment()) +
                       int(s3.is_segment());
  const bool seg_query = query.is_segment();
  switch (segments) {
    case 0: return seg_query ? Config::PPPS : Config::PPPP;
    case 1: return seg_query ? Config::PPSS : Config::PPSP;
    case 2: return seg_query ? Config::PSSS : Config::PSSP;
    default: return seg_query ? Config::SSSS : Config::SSSP;
  }
}

std::string_view to_string(ValidationError::Code c) {
  switch (c) {
    case ValidationError::Code::NotAxisAligned: return "NotAxisAligned";
    case ValidationError::Code::DegenerateSegment: return "DegenerateSegment";
    case ValidationError::Code::SitesNotDisjoint: return "SitesNotDisjoint";
    case ValidationError::Code::ConfigMismatch: return "ConfigMismatch";
  }
  return "?";
}

std::string ValidationError::message() const {
  return std::string(to_string(code)) + " (" + field + ")";
}

namespace {

// One coordinate extent of a site, with per-end openness.
struct Interval {
  Coord lo;
  Coord hi;
  bool lo_closed;
  bool hi_closed;
};

Interval point_interval(const Coord& v) { return {v, v, true, true}; }

Interval span_interval(const Coord& u, const Coord& v, bool closed) {
  return u < v ? Interval{u, v, closed, closed} : Interval{v, u, closed, closed};
}

bool intervals_meet(const Interval& p, const Interval& q) {
  Coord lo;
  bool lo_closed;
  if (p.lo > q.lo) {
    lo = p.lo, lo_closed = p.lo_closed;
  } else if (q.lo > p.lo) {
    lo = q.lo, lo_closed = q.lo_closed;
  } else {
    lo = p.lo, lo_closed = p.lo_closed && q.lo_closed;
  }
  Coord hi;
  bool hi_closed;
  if (p.hi < q.hi) {
    hi = p.hi, hi_closed = p.hi_closed;
  } else if (q.hi < p.hi) {
    hi = q.hi, hi_closed = q.hi_closed;
  } else {
    hi = p.hi, hi_closed = p.hi_closed && q.hi_closed;
  }
  return lo < hi || (lo == hi && lo_closed && hi_closed);
}

// Axis-aligned sites are products of two intervals.
std::pair<Interval, Interval> extents(const Site& s, bool closed) {
  if (s.is_point()) {
    return {point_interval(s.point().x), point_interval(s.point().y)};
  }
  const Segment& g = s.segment();
  return {span_interval(g.a.x, g.b.x, closed || g.a.x == g.b.x),
          span_interval(g.a.y, g.b.y, closed || g.a.y == g.b.y)};
}

bool sites_meet(const Site& s, bool s_closed, const Site& t, bool t_closed) {
  auto [sx, sy] = extents(s, s_closed);
  auto [tx, ty] = extents(t, t_closed);
  return intervals_meet(sx, tx) && intervals_meet(sy, ty);
}

}  // namespace

bool closed_sites_intersect(const Site& s, const Site& t) {
  return sites_meet(s, true, t, true);
}

std::optional<ValidationError> validate_instance(const InstanceRecord& rec) {
  using Code = ValidationError::Code;
  const std::array<const Site*, 4> sites = {&rec.s1, &rec.s2, &rec.s3,
                                            &rec.query};
  const std::array<const char*, 4> names = {"s1", "s2", "s3", "q"};
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (!sites[i]->is_segment()) continue;
    const Segment& g = sites[i]->segment();
    if (g.a == g.b) return ValidationError{Code::DegenerateSegment, names[i]};
    if (!g.axis()) return ValidationError{Code::NotAxisAligned, names[i]};
  }
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      // Only the query (index 3) is a closed segment.
      if (sites_meet(*sites[i], i == 3, *sites[j], j == 3)) {
        return ValidationError{Code::SitesNotDisjoint,
                               std::string(names[i]) + "," + names[j]};
      }
    }
  }
  if (rec.declared_config && *rec.declared_config != rec.config()) {
    return ValidationError{Code::ConfigMismatch, "config"};
  }
  return std::nullopt;
}

Sign orientation(const Point& p, const Point& q, const Point& r) {
  mpz_class d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sign_of_value(d);
}

Point reflect_point(const Point& p) { return {p.y, p.x}; }

Site reflect_site(const Site& s) {
  if (s.is_point()) return reflect_point(s.point());
  return Segment{reflect_point(s.segment().a), reflect_point(s.segment().b)};
}

InstanceRecord reflect_instance(const InstanceRecord& rec) {
  InstanceRecord out = rec;
  out.s1 = reflect_site(rec.s2);
  out.s2 = reflect_site(rec.s1);
  out.s3 = reflect_site(rec.s3);
  out.query = reflect_site(rec.query);
  return out;
}

Point rotate_point(const Point& p) { return {-p.y, p.x}; }

Site rotate_site(const Site& s) {
  if (s.is_point()) return rotate_point(s.point());
  return Segment{rotate_point(s.segment().a), rotate_point(s.segment().b)};
}

}  // namespace axincircle
