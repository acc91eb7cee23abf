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

#include "axincircle/instance_io.hpp"

#include <json.hpp>

namespace axincircle {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Coord parse_coord(const json& site, const char* key) {
  if (!site.contains(key)) {
    throw ParseError(std::string("missing coordinate \"") + key + "\"");
  }
  const json& v = site.at(key);
  if (v.is_number_integer()) return Coord(v.get<long>());
  if (!v.is_string()) {
    throw ParseError(std::string("coordinate \"") + key +
                     "\" must be a decimal integer string");
  }
  const std::string s = v.get<std::string>();
  Coord c;
  if (s.empty() || c.set_str(s, 10) != 0) {
    throw ParseError(std::string("bad integer \"") + s + "\" in \"" + key +
                     "\"");
  }
  return c;
}

Site parse_site(const json& j, const char* field) {
  if (!j.contains(field)) {
    throw ParseError(std::string("missing site \"") + field + "\"");
  }
  const json& s = j.at(field);
  if (!s.is_object() || !s.contains("t") || !s.at("t").is_string()) {
    throw ParseError(std::string("site \"") + field + "\" needs a \"t\" tag");
  }
  const std::string t = s.at("t").get<std::string>();
  if (t == "p") return Point{parse_coord(s, "x"), parse_coord(s, "y")};
  if (t == "s") {
    return Segment{{parse_coord(s, "ax"), parse_coord(s, "ay")},
                   {parse_coord(s, "bx"), parse_coord(s, "by")}};
  }
  throw ParseError(std::string("site \"") + field + "\" has unknown tag \"" +
                   t + "\"");
}

ordered_json site_json(const Site& s) {
  ordered_json j;
  if (s.is_point()) {
    j["t"] = "p";
    j["x"] = s.point().x.get_str();
    j["y"] = s.point().y.get_str();
  } else {
    const Segment& g = s.segment();
    j["t"] = "s";
    j["ax"] = g.a.x.get_str();
    j["ay"] = g.a.y.get_str();
    j["bx"] = g.b.x.get_str();
    j["by"] = g.b.y.get_str();
  }
  return j;
}

}  // namespace

InstanceRecord parse_instance(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("record is not a JSON object");

  InstanceRecord rec{"", parse_site(j, "s1"), parse_site(j, "s2"),
                     parse_site(j, "s3"), parse_site(j, "q"), std::nullopt,
                     std::nullopt};
  if (j.contains("id")) {
    const json& id = j.at("id");
    rec.id = id.is_string() ? id.get<std::string>() : id.dump();
  }
  if (j.contains("config")) {
    const json& c = j.at("config");
    auto cfg = c.is_string() ? parse_config(c.get<std::string>())
                             : std::nullopt;
    if (!cfg) throw ParseError("unknown config tag " + c.dump());
    rec.declared_config = cfg;
  }
  if (j.contains("expected")) {
    const json& e = j.at("expected");
    if (!e.is_number_integer() || e.get<long long>() < -1 ||
        e.get<long long>() > 1) {
      throw ParseError("\"expected\" must be -1, 0 or 1");
    }
    rec.expected = sign_of_int(e.get<int>());
  }
  return rec;
}

std::string format_instance(const InstanceRecord& rec) {
  ordered_json j;
  j["id"] = rec.id;
  j["s1"] = site_json(rec.s1);
  j["s2"] = site_json(rec.s2);
  j["s3"] = site_json(rec.s3);
  j["q"] = site_json(rec.query);
  if (rec.declared_config) j["config"] = std::string(to_string(*rec.declared_config));
  if (rec.expected) j["expected"] = to_int(*rec.expected);
  return j.dump();
}

}  // namespace axincircle
