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

#include <stdexcept>

#include "axincircle/oracle.hpp"
#include "axincircle/quad_ext.hpp"
#include "test_util.hpp"

namespace axincircle {
namespace {

using testing::P;
using testing::S;
using F = testing::Fixtures;

QuadExt root2() { return QuadExt(0, 1, 2); }

TEST(QuadExt, Arithmetic) {
  EXPECT_EQ((QuadExt(1) + root2()) * (QuadExt(-1) + root2()), QuadExt(1));
  EXPECT_EQ(root2() * root2(), QuadExt(2));
  EXPECT_EQ(QuadExt(1) / (QuadExt(1) + root2()), QuadExt(-1) + root2());
  EXPECT_EQ(-(QuadExt(3) - root2()), root2() - QuadExt(3));
  EXPECT_EQ((QuadExt(3) + root2()).conjugate(), QuadExt(3) - root2());
  EXPECT_NEAR(root2().approx(), 1.41421356, 1e-8);
}

TEST(QuadExt, Signs) {
  EXPECT_EQ((QuadExt(3) - QuadExt(2) * root2()).sign(), Sign::Positive);
  EXPECT_EQ((QuadExt(2) - QuadExt(3) * root2() / QuadExt(2)).sign(),
            Sign::Negative);
  EXPECT_EQ((QuadExt(-7) + QuadExt(5) * root2()).sign(), Sign::Positive);
  EXPECT_EQ((QuadExt(7) - QuadExt(5) * root2()).sign(), Sign::Negative);
  EXPECT_EQ(QuadExt(0).sign(), Sign::Zero);
  EXPECT_LT(QuadExt(1), root2());
}

TEST(QuadExt, Normalization) {
  const QuadExt four(0, 1, 4);
  EXPECT_TRUE(four.is_rational());
  EXPECT_EQ(four, QuadExt(2));
  const QuadExt half(0, 1, mpq_class(1, 2));  // sqrt(1/2) = sqrt(2)/2
  EXPECT_EQ(half.d(), 2);
  EXPECT_EQ(half * half, QuadExt(mpq_class(1, 2)));
  EXPECT_EQ(QuadExt(0, 3, 0), QuadExt(0));
}

TEST(QuadExt, MixedDiscriminantThrows) {
  EXPECT_THROW(root2() + QuadExt(0, 1, 3), MixedDiscriminant);
  EXPECT_NO_THROW(root2() + QuadExt(5));
}

TEST(QuadExt, SolveQuadratic) {
  QuadraticRoots r = solve_quadratic(1, -5, 6);
  ASSERT_EQ(r.count, 2);
  EXPECT_EQ(r.lower, QuadExt(2));
  EXPECT_EQ(r.upper, QuadExt(3));
  // Radicands are not reduced to square-free form: the roots live in
  // sqrt(8), not sqrt(2).
  r = solve_quadratic(-1, 0, 2);
  ASSERT_EQ(r.count, 2);
  EXPECT_EQ(r.upper.d(), 8);
  EXPECT_EQ(r.upper * r.upper, QuadExt(2));
  EXPECT_EQ(r.lower, -r.upper);
  EXPECT_EQ(r.lower.sign(), Sign::Negative);
  r = solve_quadratic(1, -4, 4);
  EXPECT_EQ(r.count, 1);
  EXPECT_EQ(r.lower, QuadExt(2));
  EXPECT_EQ(solve_quadratic(1, 0, 1).count, 0);
}

TEST(WhichRoot, Basic) {
  EXPECT_EQ(which_root(1, -5, 6, QuadExt(2)), RootChoice::Lower);
  EXPECT_EQ(which_root(1, -5, 6, QuadExt(3)), RootChoice::Upper);
  EXPECT_EQ(which_root(-1, 5, -6, QuadExt(3)), RootChoice::Upper);
  EXPECT_EQ(which_root(-1, 0, 2, root2()), RootChoice::Upper);
  EXPECT_EQ(which_root(1, -4, 4, QuadExt(2)), RootChoice::Lower);
  EXPECT_THROW(which_root(1, -5, 6, QuadExt(4)), std::domain_error);
}

void expect_point(const OraclePoint& p, long x, long y) {
  EXPECT_EQ(p.x, QuadExt(x)) << p.x.str();
  EXPECT_EQ(p.y, QuadExt(y)) << p.y.str();
}

TEST(OracleCircle, ThreeSegments) {
  const OracleCircle c = oracle_circle(F::e2_ab(), F::e2_cd(), F::e2_fg());
  expect_point(c.center, 2, 2);
  EXPECT_EQ(c.radius2, QuadExt(4));
  expect_point(c.tangency[0], 2, 0);
  expect_point(c.tangency[1], 2, 4);
  expect_point(c.tangency[2], 0, 2);
}

TEST(OracleCircle, TwoPointsOneSegment) {
  const OracleCircle c = oracle_circle(F::e3_a(), F::e3_b(), F::e3_cd());
  expect_point(c.center, 0, 5);
  EXPECT_EQ(c.radius2, QuadExt(25));
  expect_point(c.tangency[2], 0, 0);
}

TEST(OracleCircle, PointAndPerpendicularSegments) {
  const OracleCircle c = oracle_circle(F::e5_a(), F::e5_cd(), F::e5_fg());
  expect_point(c.center, 5, 5);
  expect_point(c.tangency[0], 2, 9);
  expect_point(c.tangency[1], 5, 0);
  expect_point(c.tangency[2], 10, 5);
}

TEST(OracleCircle, IrrationalCenter) {
  // Center (t, 1 - t) with t^2 - 6t - 3 = 0, so t = 3 +- 2 sqrt(3).
  const OracleCircle c = oracle_circle(P(1, 1), P(0, 0), S(-50, 3, 50, 3));
  EXPECT_EQ(c.center.x * c.center.x + c.center.y * c.center.y, c.radius2);
  const QuadExt dy = QuadExt(3) - c.center.y;
  EXPECT_EQ(dy * dy, c.radius2);
  EXPECT_FALSE(c.center.x.is_rational());
  const QuadExt t = c.center.x - QuadExt(3);
  EXPECT_EQ(t * t, QuadExt(12));
}

TEST(OracleCircle, Existence) {
  EXPECT_TRUE(circle_exists(F::e2_ab(), F::e2_cd(), F::e2_fg()));
  EXPECT_FALSE(circle_exists(F::e2_ab(), F::e2_cd(), S(0, 3, 0, 4)));
  EXPECT_FALSE(circle_exists(P(0, 0), P(1, 1), P(2, 2)));
  EXPECT_THROW(oracle_circle(P(0, 0), P(1, 1), P(2, 2)), OracleError);
}

TEST(OracleIncircle, Signs) {
  EXPECT_EQ(oracle_incircle(F::e1_a(), F::e1_b(), F::e1_c(), P(0, 0)),
            Sign::Negative);
  EXPECT_EQ(oracle_incircle(F::e1_a(), F::e1_b(), F::e1_c(), P(3, 4)),
            Sign::Zero);
  EXPECT_EQ(oracle_incircle(F::e2_ab(), F::e2_cd(), F::e2_fg(), P(4, 2)),
            Sign::Zero);
  EXPECT_EQ(oracle_incircle(F::e2_ab(), F::e2_cd(), F::e2_fg(), P(5, 5)),
            Sign::Positive);
  EXPECT_EQ(
      oracle_incircle(F::e2_ab(), F::e2_cd(), F::e2_fg(), S(4, 0, 4, 4)),
      Sign::Zero);
  EXPECT_EQ(
      oracle_incircle(F::e2_ab(), F::e2_cd(), F::e2_fg(), S(1, 2, 3, 2)),
      Sign::Negative);
  EXPECT_EQ(
      oracle_incircle(F::e3_a(), F::e3_b(), F::e3_cd(), S(6, 8, 10, 8)),
      Sign::Positive);
  EXPECT_EQ(
      oracle_incircle(F::e3_a(), F::e3_b(), F::e3_cd(), S(3, 9, 3, -9)),
      Sign::Negative);
}

}  // namespace
}  // namespace axincircle
