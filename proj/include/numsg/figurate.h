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

// Closed forms for semigroups generated by consecutive figurate numbers:
//   triangular   T_n = C(n+1, 2), semigroup <T_n, T_{n+1}, T_{n+2}>
//   tetrahedral TH_n = C(n+2, 3), semigroup <TH_n, ..., TH_{n+3}>
// plus the consecutive-integer run and the C(n, 4) / C(n, 5) families.
//
// Structural closed forms (c*, presentation, Betti, Apery) need full
// embedding dimension: n >= 3 for triangular, n >= 4 for tetrahedral.
// Below that they throw ReducedEmbeddingError. The Frobenius formulas hold
// for every n >= 1.

#ifndef NUMSG_FIGURATE_H_
#define NUMSG_FIGURATE_H_

#include <array>
#include <set>
#include <string_view>
#include <vector>

#include "numsg/arith.h"
#include "numsg/semigroup.h"

namespace numsg {

enum class Direction { kForward, kReverse };
std::string_view ToString(Direction d);

enum class Family { kTriangular, kTetrahedral };

struct TriangularTriple {
  Int n = 1;
  std::array<Int, 3> generators{};

  static TriangularTriple Make(Int n);
  GeneratorSequence Sequence() const;
};

struct TetrahedralQuadruple {
  Int n = 1;
  std::array<Int, 4> generators{};
  int residue_class = 1;  // n mod 6

  static TetrahedralQuadruple Make(Int n);
  GeneratorSequence Sequence() const;
};

// gcd(T_n, T_{n+1}): (n+1)/2 for odd n, n+1 for even n.
Int TriangularPairGcd(Int n);
// gcd(TH_n, TH_{n+1}) by the residue of n mod 6.
Int TetrahedralPairGcd(Int n);

// Parity-split cubic form and the floor form floor(n/2)(T_n + T_{n+1} +
// T_{n+2} - 1) - 1. FrobeniusTriangular evaluates both and throws
// InvariantViolation if they disagree.
Int FrobeniusTriangularCaseForm(Int n);
Int FrobeniusTriangularFloorForm(Int n);
Int FrobeniusTriangular(Int n);

// Baker's sequence a(n): the (-1)^n form and the parity-split form, with
// the same cross-assertion.
Int BakerSignedForm(Int n);
Int BakerParityForm(Int n);
Int BakerA(Int n);

// Six formulas keyed on n mod 6.
Int FrobeniusTetrahedral(Int n);

// F(n, n+1, ..., n+k-1) = (floor((n-2)/(k-1)) + 1) n - 1, 2 <= k <= n.
Int BrauerArithmeticFrobenius(Int n, Int k);

// Triangular triples are telescopic both ways; forward is canonical.
Direction TriangularDirection(Int n);
// Forward for n mod 6 in {0,1,2,3}, reverse for {4,5}.
Direction TetrahedralDirection(Int n);

GeneratorSequence TriangularArrangement(Int n);
GeneratorSequence TetrahedralArrangement(Int n);

struct ClosedFormCStar {
  GeneratorSequence arrangement;
  std::vector<Int> cstars;
};

ClosedFormCStar TriangularCStar(Int n);
ClosedFormCStar TetrahedralCStar(Int n);

// Relation pairs exactly as the closed forms state them, written over the
// canonical arrangement coordinates.
Presentation TriangularPresentation(Int n);
Presentation TetrahedralPresentation(Int n);

std::set<Int> TriangularBetti(Int n);
std::set<Int> TetrahedralBetti(Int n);

// Parameterised Apery set: sums of coefficient * parameter_generators[j]
// with 0 <= coefficient <= upper_bounds[j].
struct ClosedFormApery {
  Int anchor = 1;
  std::vector<Int> parameter_generators;
  std::vector<Int> upper_bounds;
  std::vector<Int> in_parameter_order;  // first parameter varies slowest
  AperySet by_residue;
};

ClosedFormApery TriangularApery(Int n);
ClosedFormApery TetrahedralApery(Int n);

enum class Choose4Class { kForward, kReverse, kBoth, kNeither };
std::string_view ToString(Choose4Class c);

// The five-term sequence (C(n+3,4), ..., C(n+7,4)) classified by the
// generic telescopic test in both directions, next to the expected
// pattern: forward for n mod 6 in {0,1,2}, reverse for {3,4,5} once
// n >= 9, both for n in {3,4,5}.
struct Choose4Report {
  Int n = 1;
  GeneratorSequence sequence{1};
  bool forward = false;
  bool reverse = false;
  bool expected_forward = false;
  bool expected_reverse = false;
  bool reverse_asserted = false;  // outside the stated range it is reported only

  Choose4Class classification() const;
  bool MatchesClaim() const;
};

Choose4Report Choose4Family(Int n);
GeneratorSequence Choose4Sequence(Int n);

struct PermutationOutcome {
  std::vector<Int> permutation;
  bool telescopic = false;
  size_t failing_index = 0;  // 1-based; 0 when telescopic
};

struct PermutationReport {
  size_t total = 0;
  size_t telescopic_count = 0;
  std::vector<PermutationOutcome> outcomes;  // lexicographic permutation order
};

inline constexpr size_t kMaxPermutationLength = 8;

// Runs the telescopic test on every ordering of `seq`.
PermutationReport TelescopicPermutations(const GeneratorSequence& seq);

// (C(12,5), ..., C(17,5)) = (792, 1287, 2002, 3003, 4368, 6188).
GeneratorSequence Choose5Sequence();
PermutationReport Choose5Counterexample();

// Triangular: 1, 2, then 3. Tetrahedral: 1, 3, 3, then 4.
int FigurateEmbeddingDimension(Family family, Int n);

}  // namespace numsg

#endif  // NUMSG_FIGURATE_H_
