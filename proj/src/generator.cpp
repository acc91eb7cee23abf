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

#include "axincircle/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "axincircle/oracle.hpp"

namespace axincircle {

long long Rng::uniform(long long lo, long long hi) {
  const std::uint64_t range = std::uint64_t(hi) - std::uint64_t(lo) + 1;
  if (range == 0) return static_cast<long long>(next());
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t v;
  do {
    v = next();
  } while (v > limit);
  return static_cast<long long>(std::uint64_t(lo) + v % range);
}

double Rng::unit() { return double(next() >> 11) * 0x1.0p-53; }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

static_assert(sizeof(long) == 8, "coordinates need 64-bit long");
using LL = long;

Point pt(LL x, LL y) { return {Coord(x), Coord(y)}; }
Segment hseg(LL x0, LL x1, LL y) { return {pt(x0, y), pt(x1, y)}; }
Segment vseg(LL x, LL y0, LL y1) { return {pt(x, y0), pt(x, y1)}; }

Segment maybe_swap(Segment s, Rng& rng) {
  if (rng.chance(0.5)) std::swap(s.a, s.b);
  return s;
}

bool within(const Coord& v, LL bound) { return abs(v) <= bound; }

bool within(const Site& s, LL bound) {
  if (s.is_point()) {
    return within(s.point().x, bound) && within(s.point().y, bound);
  }
  const Segment& g = s.segment();
  return within(g.a.x, bound) && within(g.a.y, bound) &&
         within(g.b.x, bound) && within(g.b.y, bound);
}

int segment_count(Config c) {
  switch (c) {
    case Config::PPPP: case Config::PPPS: return 0;
    case Config::PPSP: case Config::PPSS: return 1;
    case Config::PSSP: case Config::PSSS: return 2;
    default: return 3;
  }
}

bool segment_query(Config c) {
  return c == Config::PPPS || c == Config::PPSS || c == Config::PSSS ||
         c == Config::SSSS;
}

// Random reflection through y = x and quarter turns; both keep the box
// |x|, |y| <= bound and the counterclockwise order of the sites.
InstanceRecord random_symmetry(InstanceRecord rec, Rng& rng) {
  if (rng.chance(0.5)) rec = reflect_instance(rec);
  const LL turns = rng.uniform(0, 3);
  for (LL t = 0; t < turns; ++t) {
    rec.s1 = rotate_site(rec.s1);
    rec.s2 = rotate_site(rec.s2);
    rec.s3 = rotate_site(rec.s3);
    rec.query = rotate_site(rec.query);
  }
  return rec;
}

InstanceRecord with_cyclic_shift(std::array<Site, 3> s, Site q, Rng& rng) {
  std::rotate(s.begin(), s.begin() + rng.uniform(0, 2), s.end());
  return {"", s[0], s[1], s[2], std::move(q), std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------
// Degenerate: integer circle with lattice points, query on the circle.

struct LatticeCircle {
  LL cx, cy, r;
  std::vector<std::pair<LL, LL>> offsets;  // 8 generic, then 4 extremes
};

constexpr int kFirstExtreme = 8;  // right, top, left, bottom

std::optional<LatticeCircle> lattice_circle(Rng& rng, LL bound) {
  const LL rmax = bound / 2;
  if (rmax < 5) return std::nullopt;
  const LL mmax = std::max<LL>(2, LL(std::sqrt(double(rmax))));
  const LL m = rng.uniform(2, mmax);
  const LL n = rng.uniform(1, m - 1);
  const LL base = m * m + n * n;
  if (base > rmax) return std::nullopt;
  const LL k = rng.uniform(1, rmax / base);
  LatticeCircle c;
  c.r = k * base;
  const LL a = k * (m * m - n * n), b = 2 * k * m * n;
  c.cx = rng.uniform(-bound + c.r, bound - c.r);
  c.cy = rng.uniform(-bound + c.r, bound - c.r);
  c.offsets = {{a, b}, {-a, b}, {a, -b}, {-a, -b},
               {b, a}, {-b, a}, {b, -a}, {-b, -a},
               {c.r, 0}, {0, c.r}, {-c.r, 0}, {0, -c.r}};
  return c;
}

// Tangent segment at extreme e (0 right, 1 top, 2 left, 3 bottom).
Segment tangent_at(const LatticeCircle& c, int e, Rng& rng) {
  const LL s1 = rng.uniform(1, c.r - 1), s2 = rng.uniform(1, c.r - 1);
  switch (e) {
    case 0: return vseg(c.cx + c.r, c.cy - s1, c.cy + s2);
    case 1: return hseg(c.cx - s1, c.cx + s2, c.cy + c.r);
    case 2: return vseg(c.cx - c.r, c.cy - s1, c.cy + s2);
    default: return hseg(c.cx - s1, c.cx + s2, c.cy - c.r);
  }
}

// With `on_circle` false the query only starts at a lattice point (or sits
// next to one), so it may cross the circle as well as touch it.
std::optional<InstanceRecord> try_lattice(Config cfg, Rng& rng, LL bound,
                                          bool on_circle) {
  auto circle = lattice_circle(rng, bound);
  if (!circle) return std::nullopt;
  const LatticeCircle& c = *circle;

  std::vector<int> extremes;
  const int ns = segment_count(cfg);
  if (ns == 3) {
    const int pair = int(rng.uniform(0, 1));  // 0: left/right, 1: top/bottom
    extremes = {pair, pair + 2, int(1 - pair + 2 * rng.uniform(0, 1))};
  } else {
    std::vector<int> all = {0, 1, 2, 3};
    for (int i = 0; i < ns; ++i) {
      const LL j = rng.uniform(i, 3);
      std::swap(all[i], all[j]);
      extremes.push_back(all[i]);
    }
  }

  std::vector<bool> used(c.offsets.size(), false);
  struct Placed {
    Site site;
    double angle;
  };
  std::vector<Placed> placed;
  for (int e : extremes) {
    used[kFirstExtreme + e] = true;
    const auto& o = c.offsets[kFirstExtreme + e];
    placed.push_back({maybe_swap(tangent_at(c, e, rng), rng),
                      std::atan2(double(o.second), double(o.first))});
  }
  while (placed.size() < 3) {
    const LL j = rng.uniform(0, LL(c.offsets.size()) - 1);
    if (used[j]) continue;
    used[j] = true;
    const auto& o = c.offsets[j];
    placed.push_back({pt(c.cx + o.first, c.cy + o.second),
                      std::atan2(double(o.second), double(o.first))});
  }
  std::sort(placed.begin(), placed.end(),
            [](const Placed& p, const Placed& q) { return p.angle < q.angle; });

  std::vector<int> free;
  for (int j = 0; j < int(c.offsets.size()); ++j) {
    if (!used[j]) free.push_back(j);
  }
  const int j = free[rng.uniform(0, LL(free.size()) - 1)];
  const LL dx = c.offsets[j].first, dy = c.offsets[j].second;
  std::optional<Site> query;
  if (!on_circle) {
    const LL x = c.cx + dx, y = c.cy + dy;
    if (!segment_query(cfg)) {
      query = pt(x + rng.uniform(-1, 1), y + rng.uniform(-1, 1));
    } else {
      const LL len = rng.uniform(1, 3 * c.r) * (rng.chance(0.5) ? 1 : -1);
      query = maybe_swap(rng.chance(0.5) ? hseg(x, x + len, y)
                                         : vseg(x, y, y + len), rng);
    }
  } else if (!segment_query(cfg)) {
    query = pt(c.cx + dx, c.cy + dy);
  } else if (j >= kFirstExtreme && rng.chance(0.5)) {
    query = maybe_swap(tangent_at(c, j - kFirstExtreme, rng), rng);
  } else {
    // Moving away from the center along an axis only increases distance.
    const LL len = rng.uniform(1, c.r);
    const LL x = c.cx + dx, y = c.cy + dy;
    const bool horizontal = dx != 0 && (dy == 0 || rng.chance(0.5));
    Segment s = horizontal ? hseg(x, x + (dx > 0 ? len : -len), y)
                           : vseg(x, y, y + (dy > 0 ? len : -len));
    query = maybe_swap(s, rng);
  }
  return with_cyclic_shift({placed[0].site, placed[1].site, placed[2].site},
                           *query, rng);
}

// ---------------------------------------------------------------------------
// Generic: oracle-located circle around randomly drawn sites.

struct Window {
  LL ox, oy, w;

  LL x(Rng& rng) const { return ox + rng.uniform(-w, w); }
  LL y(Rng& rng) const { return oy + rng.uniform(-w, w); }
};

Window random_window(Rng& rng, LL bound) {
  const int top = std::max(3, int(std::floor(std::log2(double(bound)))));
  const int e = int(rng.uniform(3, top));
  const LL w = std::min<LL>(bound, rng.uniform(LL(1) << (e - 1), LL(1) << e));
  const LL span = bound - w;
  return {rng.uniform(-span, span), rng.uniform(-span, span), w};
}

// Canonical sites with provisional segments far longer than the circle.
std::optional<std::array<Site, 3>> draw_sites(Config cfg, Rng& rng, LL bound) {
  const Window win = random_window(rng, bound);
  const LL far = 8 * bound;
  auto hline = [far](LL y) { return hseg(-far, far, y); };
  auto vline = [far](LL x) { return vseg(x, -far, far); };

  switch (segment_count(cfg)) {
    case 0: {
      const Point a = pt(win.x(rng), win.y(rng)), b = pt(win.x(rng), win.y(rng)),
                  c = pt(win.x(rng), win.y(rng));
      if (orientation(a, b, c) == Sign::Zero) return std::nullopt;
      return std::array<Site, 3>{a, b, c};
    }
    case 1: {
      const LL c = win.y(rng);
      LL xa = win.x(rng), ya = win.y(rng), xb = win.x(rng), yb = win.y(rng);
      if (rng.chance(0.15)) yb = ya;
      else if (rng.chance(0.15)) xb = xa;
      if (ya == c || yb == c) return std::nullopt;
      if ((ya > c) != (yb > c)) yb = 2 * c - yb;
      return std::array<Site, 3>{pt(xa, ya), pt(xb, yb), hline(c)};
    }
    case 2: {
      if (rng.chance(0.5)) {
        LL c1 = win.y(rng), c2 = win.y(rng);
        if (c1 > c2) std::swap(c1, c2);
        if (c2 - c1 < 2) return std::nullopt;
        const Point a = pt(win.x(rng), rng.uniform(c1 + 1, c2 - 1));
        return std::array<Site, 3>{a, hline(c1), hline(c2)};
      }
      const LL c = win.y(rng), f = win.x(rng);
      const Point a = pt(win.x(rng), win.y(rng));
      if (a.x == f || a.y == c) return std::nullopt;
      return std::array<Site, 3>{a, hline(c), vline(f)};
    }
    default: {
      const LL a = win.y(rng), c = win.y(rng), f = win.x(rng);
      if (a == c) return std::nullopt;
      return std::array<Site, 3>{hline(a), hline(c), vline(f)};
    }
  }
}

// Span [foot - s1, foot + s2] with integer ends strictly around the foot.
Segment trim(const Segment& line, const OraclePoint& foot, double radius,
             Rng& rng) {
  const LL reach = std::max<LL>(1, std::llround(radius * 2 * rng.unit()));
  const LL s1 = rng.uniform(1, reach), s2 = rng.uniform(1, reach);
  if (line.is_horizontal()) {
    const double v = foot.x.approx();
    return hseg(LL(std::floor(v)) - s1, LL(std::ceil(v)) + s2,
                line.a.y.get_si());
  }
  const double v = foot.y.approx();
  return vseg(line.a.x.get_si(), LL(std::floor(v)) - s1,
              LL(std::ceil(v)) + s2);
}

LL clamp_bound(double v, LL bound) {
  if (!(std::fabs(v) < double(bound))) return v < 0 ? -bound : bound;
  return std::llround(v);
}

Site draw_query(Config cfg, const OracleCircle& circle, Rng& rng, LL bound) {
  const double cx = circle.center.x.approx(), cy = circle.center.y.approx();
  const double r = std::sqrt(circle.radius2.approx());
  if (!segment_query(cfg)) {
    if (rng.chance(0.7)) {
      const double t = 2 * std::numbers::pi * rng.unit();
      const double s = r * (1 + (rng.unit() - 0.5) * (rng.chance(0.5) ? 0.02 : 0.4));
      return pt(clamp_bound(cx + s * std::cos(t), bound),
                clamp_bound(cy + s * std::sin(t), bound));
    }
    return pt(clamp_bound(cx + r * 4 * (rng.unit() - 0.5), bound),
              clamp_bound(cy + r * 4 * (rng.unit() - 0.5), bound));
  }
  // Offset of the supporting line from the center, in radii.
  const double u = rng.chance(0.5) ? (rng.chance(0.5) ? 1 : -1) *
                                         (1 + (rng.unit() - 0.5) * 0.02)
                                   : 2.6 * (rng.unit() - 0.5);
  const double start = 4 * (rng.unit() - 0.5);
  const LL len = std::max<LL>(1, std::llround(r * 3 * rng.unit()));
  if (rng.chance(0.5)) {
    const LL y = clamp_bound(cy + r * u, bound);
    const LL x0 = clamp_bound(cx + r * start, bound);
    const LL x1 = clamp_bound(double(x0 + len), bound);
    return maybe_swap(hseg(x0, x1 == x0 ? x0 - 1 : x1, y), rng);
  }
  const LL x = clamp_bound(cx + r * u, bound);
  const LL y0 = clamp_bound(cy + r * start, bound);
  const LL y1 = clamp_bound(double(y0 + len), bound);
  return maybe_swap(vseg(x, y0, y1 == y0 ? y0 - 1 : y1), rng);
}

std::optional<InstanceRecord> try_generic(Config cfg, Rng& rng, LL bound) {
  auto drawn = draw_sites(cfg, rng, bound);
  if (!drawn) return std::nullopt;
  const std::array<Site, 3>& s = *drawn;

  // Either cyclic class may admit a circle; pick one at random.
  std::vector<std::pair<std::array<Site, 3>, OracleCircle>> found;
  for (const auto& order : {std::array<Site, 3>{s[0], s[1], s[2]},
                            std::array<Site, 3>{s[1], s[0], s[2]}}) {
    try {
      found.emplace_back(order, oracle_circle(order[0], order[1], order[2]));
    } catch (const OracleError&) {
    }
  }
  if (found.empty()) return std::nullopt;
  auto [sites, circle] = found[rng.uniform(0, LL(found.size()) - 1)];

  const double radius = std::sqrt(circle.radius2.approx());
  for (int i = 0; i < 3; ++i) {
    if (sites[i].is_segment()) {
      sites[i] = maybe_swap(trim(sites[i].segment(), circle.tangency[i],
                                 radius, rng), rng);
    }
  }
  Site q = draw_query(cfg, circle, rng, bound);
  return with_cyclic_shift(sites, std::move(q), rng);
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

Config config_for_index(const GenConfig& cfg, std::size_t index) {
  return cfg.config ? *cfg.config : kAllConfigs[index % kAllConfigs.size()];
}

InstanceRecord generate_instance(const GenConfig& cfg, std::size_t index) {
  const Config config = config_for_index(cfg, index);
  Rng rng(instance_seed(cfg.seed, index));
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    const bool degenerate = rng.chance(cfg.degenerate_frac);
    std::optional<InstanceRecord> rec;
    if (degenerate) {
      rec = try_lattice(config, rng, cfg.bound, true);
    } else if (rng.chance(0.15)) {
      rec = try_lattice(config, rng, cfg.bound, false);
    } else {
      rec = try_generic(config, rng, cfg.bound);
    }
    if (!rec) continue;
    if (!within(rec->s1, cfg.bound) || !within(rec->s2, cfg.bound) ||
        !within(rec->s3, cfg.bound) || !within(rec->query, cfg.bound)) {
      continue;
    }
    *rec = random_symmetry(std::move(*rec), rng);
    if (validate_instance(*rec)) continue;
    Sign expected;
    try {
      expected = oracle_incircle(rec->s1, rec->s2, rec->s3, rec->query);
    } catch (const OracleError&) {
      continue;
    }
    if (degenerate && expected != Sign::Zero) {
      throw std::logic_error("lattice query off the circle at index " +
                             std::to_string(index));
    }
    rec->id = std::string(to_string(config)) + "-" + std::to_string(index);
    rec->declared_config = config;
    rec->expected = expected;
    return std::move(*rec);
  }
  throw GenerationExhausted("no valid " + std::string(to_string(config)) +
                            " instance after " +
                            std::to_string(kGenerationRetries) +
                            " attempts at index " + std::to_string(index));
}

std::vector<InstanceRecord> generate(const GenConfig& cfg) {
  std::vector<InstanceRecord> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    out.push_back(generate_instance(cfg, i));
  }
  return out;
}

}  // namespace axincircle
