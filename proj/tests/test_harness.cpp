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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "axincircle/commands.hpp"
#include "axincircle/generator.hpp"
#include "axincircle/incircle.hpp"
#include "axincircle/instance_io.hpp"
#include "axincircle/oracle.hpp"
#include "test_util.hpp"

namespace axincircle {
namespace {

using testing::P;
using testing::S;
using F = testing::Fixtures;

const char kE1[] =
    R"({"id":"E1","s1":{"t":"p","x":"0","y":"5"},)"
    R"("s2":{"t":"p","x":"-5","y":"0"},"s3":{"t":"p","x":"5","y":"0"},)"
    R"("q":{"t":"p","x":"0","y":"0"}})";

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char ch : s) n += ch == '\n';
  return n;
}

TEST(InstanceIo, RoundTrip) {
  InstanceRecord rec = testing::record(F::e5_a(), F::e5_cd(), F::e5_fg(),
                                       S(0, 6, 0, 9));
  rec.id = "E5";
  rec.expected = Sign::Positive;
  rec.declared_config = Config::PSSS;
  const std::string line = format_instance(rec);
  const InstanceRecord back = parse_instance(line);
  EXPECT_EQ(back.id, "E5");
  EXPECT_EQ(back.s1, rec.s1);
  EXPECT_EQ(back.s3, rec.s3);
  EXPECT_EQ(back.query, rec.query);
  EXPECT_EQ(back.expected, Sign::Positive);
  EXPECT_EQ(back.declared_config, Config::PSSS);
  EXPECT_EQ(format_instance(back), line);
}

TEST(InstanceIo, LargeCoordinatesSurvive) {
  const std::string big = "123456789012345678901234567890";
  InstanceRecord rec = testing::record(F::e1_a(), F::e1_b(), F::e1_c(),
                                       Point{Coord(big), Coord("-" + big)});
  const InstanceRecord back = parse_instance(format_instance(rec));
  EXPECT_EQ(back.query.point().x.get_str(), big);
  EXPECT_EQ(back.query.point().y.get_str(), "-" + big);
}

TEST(InstanceIo, Rejections) {
  EXPECT_THROW(parse_instance("{"), ParseError);
  EXPECT_THROW(parse_instance("[1,2]"), ParseError);
  EXPECT_THROW(parse_instance(R"({"s1":{"t":"p","x":"0","y":"0"}})"),
               ParseError);
  std::string bad = kE1;
  bad.replace(bad.find("\"5\""), 3, "\"5x\"");
  EXPECT_THROW(parse_instance(bad), ParseError);
  std::string tag = kE1;
  tag.replace(tag.find("\"t\":\"p\""), 7, "\"t\":\"z\"");
  EXPECT_THROW(parse_instance(tag), ParseError);
}

TEST(Eval, ReferenceRecord) {
  std::istringstream in(std::string(kE1) + "\n");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_eval(in, out, err), kExitOk);
  EXPECT_EQ(out.str(), "{\"id\":\"E1\",\"sign\":-1}\n");
  EXPECT_TRUE(err.str().empty());
}

TEST(Eval, MalformedLineNamed) {
  std::istringstream in(std::string(kE1) + "\nnot json\n" + kE1 + "\n");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_eval(in, out, err), kExitInputError);
  EXPECT_NE(err.str().find("line 2"), std::string::npos) << err.str();
  EXPECT_EQ(count_lines(out.str()), 2u);
}

TEST(Eval, InvalidInstanceNamed) {
  // Query touches site B.
  std::string touching = kE1;
  touching.replace(touching.rfind("\"x\":\"0\""), 7, "\"x\":\"-5\"");
  std::istringstream in(touching + "\n");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_eval(in, out, err), kExitInputError);
  EXPECT_NE(err.str().find("line 1"), std::string::npos) << err.str();
}

TEST(Eval, EmptyInput) {
  std::istringstream in("");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_eval(in, out, err), kExitOk);
  EXPECT_TRUE(out.str().empty());
}

TEST(Verify, GoldenCorpus) {
  std::ifstream in(AXINCIRCLE_TEST_DATA_DIR "/golden.jsonl");
  ASSERT_TRUE(in);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(&in, GenConfig{}, out, err), kExitOk) << out.str();
  EXPECT_NE(err.str().find("verified 19 instance(s): 0 disagreement(s)"),
            std::string::npos)
      << err.str();
}

TEST(Verify, ZeroCount) {
  GenConfig g;
  g.count = 0;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(nullptr, g, out, err), kExitOk);
  EXPECT_NE(err.str().find("verified 0 instance(s)"), std::string::npos);
}

TEST(Verify, CorruptedExpectationFails) {
  InstanceRecord rec =
      testing::record(F::e1_a(), F::e1_b(), F::e1_c(), P(0, 0));
  rec.id = "bad";
  rec.expected = Sign::Positive;
  std::istringstream in(format_instance(rec) + "\n");
  std::ostringstream out, err, log;
  EXPECT_EQ(cmd_verify(&in, GenConfig{}, out, err, &log), kExitFailure);
  EXPECT_NE(out.str().find("\"id\":\"bad\""), std::string::npos);
  EXPECT_NE(out.str().find("\"agree\":false"), std::string::npos);
  EXPECT_EQ(count_lines(log.str()), 1u);
}

TEST(Verify, GeneratedMixed) {
  GenConfig g;
  g.seed = 11;
  g.count = 400;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(nullptr, g, out, err), kExitOk) << out.str();
  EXPECT_TRUE(out.str().empty());
}

TEST(Gen, Deterministic) {
  GenConfig g;
  g.seed = 42;
  g.count = 64;
  std::ostringstream a, b, err;
  EXPECT_EQ(cmd_gen(g, a, err), kExitOk);
  EXPECT_EQ(cmd_gen(g, b, err), kExitOk);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(count_lines(a.str()), 64u);
  g.seed = 43;
  std::ostringstream c;
  cmd_gen(g, c, err);
  EXPECT_NE(a.str(), c.str());
}

TEST(Gen, InstanceIndependentOfCount) {
  GenConfig g;
  g.seed = 5;
  g.count = 30;
  const auto all = generate(g);
  EXPECT_EQ(format_instance(generate_instance(g, 17)),
            format_instance(all[17]));
}

TEST(Gen, RecordsAreValidAndTagged) {
  GenConfig g;
  g.seed = 3;
  g.count = 80;
  for (const InstanceRecord& rec : generate(g)) {
    EXPECT_FALSE(validate_instance(rec)) << rec.id;
    ASSERT_TRUE(rec.declared_config);
    EXPECT_EQ(*rec.declared_config, rec.config());
    ASSERT_TRUE(rec.expected);
    EXPECT_TRUE(circle_exists(rec.s1, rec.s2, rec.s3)) << rec.id;
  }
}

TEST(Gen, AllDegenerate) {
  for (Config c : kAllConfigs) {
    GenConfig g;
    g.seed = 9;
    g.count = 40;
    g.config = c;
    g.degenerate_frac = 1.0;
    for (const InstanceRecord& rec : generate(g)) {
      EXPECT_EQ(*rec.expected, Sign::Zero) << rec.id;
      EXPECT_EQ(incircle(rec.s1, rec.s2, rec.s3, rec.query), Sign::Zero)
          << rec.id;
    }
  }
}

TEST(Gen, SmallBound) {
  GenConfig g;
  g.seed = 1;
  g.count = 200;
  g.bound = 12;
  for (const InstanceRecord& rec : generate(g)) {
    EXPECT_EQ(incircle(rec.s1, rec.s2, rec.s3, rec.query), *rec.expected)
        << format_instance(rec);
  }
}

TEST(Audit, ReportsBounds) {
  GenConfig g;
  g.seed = 7;
  g.count = 800;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_audit(nullptr, g, out, err), kExitOk);
  const std::string s = out.str();
  EXPECT_NE(s.find("PPPP max degree 4 (bound 4"), std::string::npos) << s;
  EXPECT_NE(s.find("PPSS max degree 6 (bound 6"), std::string::npos) << s;
  EXPECT_NE(s.find("SSSS max degree 2 (bound 2"), std::string::npos) << s;
  EXPECT_EQ(count_lines(s), 8u);
}

TEST(Audit, PerConfigStats) {
  GenConfig g;
  g.seed = 7;
  g.count = 400;
  const AuditReport r = audit_degrees(generate(g));
  EXPECT_TRUE(r.within_bounds());
  for (Config c : kAllConfigs) {
    ASSERT_TRUE(r.per_config.count(c)) << to_string(c);
    EXPECT_GT(r.per_config.at(c).attaining, 0u) << to_string(c);
  }
}

TEST(Bench, OneLinePerConfig) {
  GenConfig g;
  g.seed = 2;
  g.count = 80;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bench(nullptr, g, out, err), kExitOk);
  EXPECT_EQ(count_lines(out.str()), 8u);
  EXPECT_NE(out.str().find("SSSP instances 10 fast "), std::string::npos)
      << out.str();
}

}  // namespace
}  // namespace axincircle
