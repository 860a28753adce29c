// Copyright 2026 The numsg Authors
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

#include "numsg/arith.h"

#include <algorithm>
#include <limits>

namespace numsg {

Int CheckedAdd(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError(std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

Int CheckedSub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError(std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

Int CheckedMul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError(std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

Wide Wide::operator+(Wide o) const {
  Rep r;
  if (__builtin_add_overflow(v_, o.v_, &r)) {
    throw OverflowError("128-bit addition");
  }
  return FromRep(r);
}

Wide Wide::operator-(Wide o) const {
  Rep r;
  if (__builtin_sub_overflow(v_, o.v_, &r)) {
    throw OverflowError("128-bit subtraction");
  }
  return FromRep(r);
}

Wide Wide::operator*(Wide o) const {
  Rep r;
  if (__builtin_mul_overflow(v_, o.v_, &r)) {
    throw OverflowError("128-bit multiplication");
  }
  return FromRep(r);
}

Wide Wide::DivExact(Wide divisor, const char* what) const {
  if (divisor.v_ == 0) throw InvariantViolation(std::string(what) + ": / 0");
  if (v_ % divisor.v_ != 0) {
    throw InvariantViolation(std::string(what) + ": " + ToString() +
                             " is not divisible by " + divisor.ToString());
  }
  return FromRep(v_ / divisor.v_);
}

Wide Wide::FloorDiv(Wide divisor) const {
  Rep q = v_ / divisor.v_;
  if ((v_ % divisor.v_ != 0) && ((v_ < 0) != (divisor.v_ < 0))) --q;
  return FromRep(q);
}

Wide Wide::Mod(Wide divisor) const {
  return *this - FloorDiv(divisor) * divisor;
}

Int Wide::ToInt() const {
  if (v_ > std::numeric_limits<Int>::max() ||
      v_ < std::numeric_limits<Int>::min()) {
    throw OverflowError(ToString() + " does not fit in 64 bits");
  }
  return static_cast<Int>(v_);
}

std::string Wide::ToString() const {
  if (v_ == 0) return "0";
  Rep v = v_;
  const bool negative = v < 0;
  std::string digits;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

namespace detail {

Int GcdOrZero(Int a, Int b) {
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

Int Gcd(Int a, Int b) {
  if (a < 1 || b < 1) {
    throw InvalidInputError("gcd expects positive integers");
  }
  return detail::GcdOrZero(a, b);
}

Int GcdList(std::span<const Int> xs) {
  if (xs.empty()) throw InvalidInputError("empty sequence");
  Int g = 0;
  for (Int x : xs) {
    if (x < 1) throw InvalidInputError("gcd expects positive integers");
    g = detail::GcdOrZero(g, x);
  }
  return g;
}

Int Binomial(Int n, Int k) {
  if (n < 0 || k < 0) throw InvalidInputError("binomial expects n, k >= 0");
  if (k > n) return 0;
  k = std::min(k, n - k);
  // After step i the accumulator holds C(n-k+i, i), never more than the
  // result, so an oversized intermediate means the result overflows too.
  Wide acc = 1;
  for (Int i = 1; i <= k; ++i) {
    acc = (acc * Wide(n - k + i)).DivExact(i, "binomial step");
    if (acc > Wide(std::numeric_limits<Int>::max())) {
      throw OverflowError("binomial(" + std::to_string(n) + ", " +
                          std::to_string(k) + ")");
    }
  }
  return acc.ToInt();
}

Int Triangular(Int n) {
  if (n < 1) throw InvalidInputError("figurate index must be >= 1");
  return Binomial(CheckedAdd(n, 1), 2);
}

Int Tetrahedral(Int n) {
  if (n < 1) throw InvalidInputError("figurate index must be >= 1");
  return Binomial(CheckedAdd(n, 2), 3);
}

}  // namespace numsg
