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

// Exact integer kernels. Values are 64-bit; every operation that can leave
// that range raises OverflowError instead of wrapping.

#ifndef NUMSG_ARITH_H_
#define NUMSG_ARITH_H_

#include <cstdint>
#include <span>
#include <string>

#include "numsg/errors.h"

namespace numsg {

using Int = std::int64_t;

Int CheckedAdd(Int a, Int b);
Int CheckedSub(Int a, Int b);
Int CheckedMul(Int a, Int b);

// A 128-bit intermediate for closed-form evaluation. All arithmetic is
// checked, and ToInt() narrows back to 64 bits or throws.
class Wide {
 public:
  __extension__ typedef __int128 Rep;

  constexpr Wide() : v_(0) {}
  constexpr Wide(Int v) : v_(v) {}  // NOLINT(runtime/explicit)

  Wide operator+(Wide o) const;
  Wide operator-(Wide o) const;
  Wide operator*(Wide o) const;
  Wide operator-() const { return Wide() - *this; }

  // Exact division; a non-zero remainder is an InvariantViolation naming
  // `what`.
  Wide DivExact(Wide divisor, const char* what) const;
  // Floor division for positive divisors.
  Wide FloorDiv(Wide divisor) const;
  Wide Mod(Wide divisor) const;

  bool operator==(const Wide& o) const { return v_ == o.v_; }
  auto operator<=>(const Wide& o) const { return v_ <=> o.v_; }

  Int ToInt() const;
  std::string ToString() const;

 private:
  static Wide FromRep(Rep v) {
    Wide w;
    w.v_ = v;
    return w;
  }
  Rep v_;
};

// Greatest common divisor of two positive integers.
Int Gcd(Int a, Int b);

// Left fold of Gcd over a non-empty list of positive integers.
Int GcdList(std::span<const Int> xs);

// Exact binomial coefficient; zero when k > n.
Int Binomial(Int n, Int k);

// T_n = n(n+1)/2.
Int Triangular(Int n);
// TH_n = n(n+1)(n+2)/6.
Int Tetrahedral(Int n);

namespace detail {
// gcd(0, b) = b, which makes folds total.
Int GcdOrZero(Int a, Int b);
}  // namespace detail

}  // namespace numsg

#endif  // NUMSG_ARITH_H_
