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

#ifndef AXINCIRCLE_GEOM_HPP_
#define AXINCIRCLE_GEOM_HPP_

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace axincircle {

// Lattice coordinate. Rational inputs must be scaled to a common integer
// denominator by the caller; every predicate is homogeneous so signs survive.
using Coord = mpz_class;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of_value(const mpz_class& v) {
  return static_cast<Sign>(sgn(v));
}
inline Sign sign_of_int(int v) {
  return v < 0 ? Sign::Negative : (v > 0 ? Sign::Positive : Sign::Zero);
}
inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator-(Sign s) { return static_cast<Sign>(-to_int(s)); }
inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(to_int(a) * to_int(b));
}

// Selects x1 or x2 among the real roots x1 <= x2 of a quadratic.
enum class RootChoice { Lower, Upper };

inline RootChoice flip(RootChoice c) {
  return c == RootChoice::Lower ? RootChoice::Upper : RootChoice::Lower;
}

struct Point {
  Coord x;
  Coord y;

  friend bool operator==(const Point& p, const Point& q) {
    return p.x == q.x && p.y == q.y;
  }
};

enum class Axis { Horizontal, Vertical };

struct Segment {
  Point a;
  Point b;

  // nullopt for diagonal or zero-length segments.
  std::optional<Axis> axis() const;
  bool is_horizontal() const { return axis() == Axis::Horizontal; }
  bool is_vertical() const { return axis() == Axis::Vertical; }
  // Coordinate of the supporting line: y for horizontal, x for vertical.
  const Coord& line_coord() const { return is_horizontal() ? a.y : a.x; }

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a == t.a && s.b == t.b;
  }
};

enum class SiteKind { Point, Segment };

class Site {
 public:
  Site(Point p) : v_(std::move(p)) {}      // NOLINT(runtime/explicit)
  Site(Segment s) : v_(std::move(s)) {}    // NOLINT(runtime/explicit)

  SiteKind kind() const {
    return v_.index() == 0 ? SiteKind::Point : SiteKind::Segment;
  }
  bool is_point() const { return kind() == SiteKind::Point; }
  bool is_segment() const { return kind() == SiteKind::Segment; }
  const Point& point() const { return std::get<Point>(v_); }
  const Segment& segment() const { return std::get<Segment>(v_); }

  friend bool operator==(const Site& s, const Site& t) { return s.v_ == t.v_; }

 private:
  std::variant<Point, Segment> v_;
};

// Site types of the three circle-defining sites followed by the query type.
enum class Config { PPPP, PPPS, PPSP, PPSS, PSSP, PSSS, SSSP, SSSS };

inline constexpr std::array<Config, 8> kAllConfigs = {
    Config::PPPP, Config::PPPS, Config::PPSP, Config::PPSS,
    Config::PSSP, Config::PSSS, Config::SSSP, Config::SSSS};

std::string_view to_string(Config c);
std::optional<Config> parse_config(std::string_view s);

// Pure function of the four site tags; the order of s1..s3 does not matter.
Config config_of(const Site& s1, const Site& s2, const Site& s3,
                 const Site& query);

struct InstanceRecord {
  std::string id;
  Site s1;
  Site s2;
  Site s3;
  Site query;
  // Tag carried by a fixture, if any; checked against the derived one.
  std::optional<Config> declared_config;
  std::optional<Sign> expected;

  Config config() const { return config_of(s1, s2, s3, query); }
};

struct ValidationError {
  enum class Code { NotAxisAligned, DegenerateSegment, SitesNotDisjoint,
                    ConfigMismatch };
  Code code;
  std::string field;

  std::string message() const;
};

std::string_view to_string(ValidationError::Code c);

// Checks axis alignment, non-degeneracy, pairwise disjointness and the
// declared tag. Site segments are open, the query segment is closed; a
// point may coincide with a segment endpoint. Circle existence is not
// checked here (see oracle::circle_exists).
std::optional<ValidationError> validate_instance(const InstanceRecord& rec);

// True when the closed point sets of the two sites intersect.
bool closed_sites_intersect(const Site& s, const Site& t);

Sign orientation(const Point& p, const Point& q, const Point& r);

// Reflection through y = x.
Point reflect_point(const Point& p);
Site reflect_site(const Site& s);
// (R(s2), R(s1), R(s3), R(q)): reflection reverses circle orientation.
InstanceRecord reflect_instance(const InstanceRecord& rec);

// Counterclockwise quarter turn (x, y) -> (-y, x); preserves orientation.
Point rotate_point(const Point& p);
Site rotate_site(const Site& s);

}  // namespace axincircle

#endif  // AXINCIRCLE_GEOM_HPP_
