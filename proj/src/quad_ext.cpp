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

#include "axincircle/quad_ext.hpp"

#include <cmath>
#include <utility>

namespace axincircle {

namespace {

mpz_class common_d(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational() || x.b() == 0) return y.d();
  if (y.is_rational() || y.b() == 0) return x.d();
  if (x.d() != y.d()) {
    throw MixedDiscriminant("sqrt(" + x.d().get_str() + ") and sqrt(" +
                            y.d().get_str() + ")");
  }
  return x.d();
}

}  // namespace

QuadExt::QuadExt(mpq_class a) : a_(std::move(a)) {}

QuadExt::QuadExt(mpq_class a, mpq_class b, const mpq_class& d)
    : a_(std::move(a)), b_(std::move(b)) {
  if (sgn(d) < 0) throw std::domain_error("square root of a negative number");
  // sqrt(p/q) = sqrt(p q) / q.
  d_ = d.get_num() * d.get_den();
  b_ /= d.get_den();
  normalize();
}

void QuadExt::normalize() {
  if (d_ == 0 || b_ == 0) {
    d_ = 0;
    b_ = 0;
    return;
  }
  if (mpz_perfect_square_p(d_.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), d_.get_mpz_t());
    a_ += b_ * r;
    b_ = 0;
    d_ = 0;
  }
}

Sign QuadExt::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (d_ == 0 || sb == 0) return sign_of_int(sa);
  if (sa == 0 || sa == sb) return sign_of_int(sb);
  // Opposite signs: compare a^2 with b^2 D.
  const mpq_class diff = a_ * a_ - b_ * b_ * d_;
  return sign_of_int(sa * sgn(diff));
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

double QuadExt::approx() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadExt::str() const {
  if (d_ == 0) return a_.get_str();
  return a_.get_str() + " + " + b_.get_str() + "*sqrt(" + d_.get_str() + ")";
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  QuadExt r;
  r.d_ = common_d(x, y);
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  r.normalize();
  return r;
}

QuadExt operator-(const QuadExt& x) {
  QuadExt r = x;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  QuadExt r;
  r.d_ = common_d(x, y);
  r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * r.d_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  r.normalize();
  return r;
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  if (y.sign() == Sign::Zero) throw std::domain_error("division by zero");
  // x / y = x conj(y) / (a^2 - b^2 D).
  const mpq_class norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
  QuadExt r = x * y.conjugate();
  r.a_ /= norm;
  r.b_ /= norm;
  r.normalize();
  return r;
}

QuadraticRoots solve_quadratic(const mpq_class& q2, const mpq_class& q1,
                               const mpq_class& q0) {
  if (q2 == 0) throw std::domain_error("not a quadratic");
  const mpq_class disc = q1 * q1 - 4 * q2 * q0;
  QuadraticRoots r;
  if (sgn(disc) < 0) return r;
  const mpq_class den = 2 * q2;
  const QuadExt s(0, 1, disc);
  const QuadExt first = (QuadExt(-q1) + s) / QuadExt(den);
  const QuadExt second = (QuadExt(-q1) - s) / QuadExt(den);
  r.count = sgn(disc) == 0 ? 1 : 2;
  if (second < first) {
    r.lower = second;
    r.upper = first;
  } else {
    r.lower = first;
    r.upper = second;
  }
  return r;
}

}  // namespace axincircle
