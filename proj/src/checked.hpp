// Copyright 2026 The drra Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DRRA_SRC_CHECKED_HPP_
#define DRRA_SRC_CHECKED_HPP_

#include <cstdint>
#include <numeric>
#include <string>

#include "drra/error.hpp"

namespace drra::internal {

inline std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kArithmeticOverflow, "integer overflow in add");
  }
  return r;
}

inline std::int64_t CheckedSub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::kArithmeticOverflow, "integer overflow in sub");
  }
  return r;
}

inline std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kArithmeticOverflow, "integer overflow in mul");
  }
  return r;
}

// Exact rational with a positive, reduced denominator. Every operation is
// overflow checked.
class Rational {
 public:
  Rational(std::int64_t value = 0) : num_(value), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den == 0) {
      throw Error(ErrorCode::kInvalidArgument, "division by zero");
    }
    Normalize();
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t l = a.den_ / g;
    return Rational(
        CheckedAdd(CheckedMul(a.num_, b.den_ / g), CheckedMul(b.num_, l)),
        CheckedMul(l, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(CheckedSub(0, b.num_), b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t d1 = g1 == 0 ? 1 : g1;
    const std::int64_t d2 = g2 == 0 ? 1 : g2;
    return Rational(CheckedMul(a.num_ / d1, b.num_ / d2),
                    CheckedMul(a.den_ / d2, b.den_ / d1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
      throw Error(ErrorCode::kInvalidArgument, "division by zero");
    }
    return a * Rational(b.den_, b.num_);
  }
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string ToString() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void Normalize() {
    if (den_ < 0) {
      num_ = CheckedSub(0, num_);
      den_ = CheckedSub(0, den_);
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace drra::internal

#endif  // DRRA_SRC_CHECKED_HPP_
