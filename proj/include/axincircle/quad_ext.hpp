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

// Exact numbers a + b sqrt(D) with rational a, b and a non-square integer
// D > 0 (D == 0 for plain rationals).

#ifndef AXINCIRCLE_QUAD_EXT_HPP_
#define AXINCIRCLE_QUAD_EXT_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "axincircle/geom.hpp"

namespace axincircle {

// Two irrational operands from different fields.
class MixedDiscriminant : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(mpq_class a);  // NOLINT(runtime/explicit)
  QuadExt(const mpz_class& a) : QuadExt(mpq_class(a)) {}  // NOLINT
  QuadExt(long a) : QuadExt(mpq_class(a)) {}              // NOLINT
  // a + b sqrt(d) for rational d >= 0.
  QuadExt(mpq_class a, mpq_class b, const mpq_class& d);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpz_class& d() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  Sign sign() const;
  QuadExt conjugate() const;
  double approx() const;
  std::string str() const;

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x);

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign() == Sign::Zero;
  }
  friend bool operator<(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign() == Sign::Negative;
  }

 private:
  void normalize();

  mpq_class a_;
  mpq_class b_;
  mpz_class d_;
};

// Roots x1 <= x2 of q2 x^2 + q1 x + q0 (q2 != 0). Empty when complex.
struct QuadraticRoots {
  int count = 0;  // 0, 1 (double root) or 2
  QuadExt lower;
  QuadExt upper;
};
QuadraticRoots solve_quadratic(const mpq_class& q2, const mpq_class& q1,
                               const mpq_class& q0);

}  // namespace axincircle

#endif  // AXINCIRCLE_QUAD_EXT_HPP_
