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

// Telescopic sequences, c* constants, the freeness test and the structure
// of free numerical semigroups: Frobenius number, Apery set, minimal
// presentation and Betti elements, plus the gcd reductions of Johnson and
// Brauer-Shockley.

#ifndef NUMSG_TELESCOPIC_H_
#define NUMSG_TELESCOPIC_H_

#include <set>
#include <variant>
#include <vector>

#include "numsg/arith.h"
#include "numsg/semigroup.h"

namespace numsg {

// Prefix gcds d_i = gcd(a_1, ..., a_i).
std::vector<Int> DivideChain(const GeneratorSequence& seq);

struct TelescopicCertificate {
  GeneratorSequence sequence;
  std::vector<Int> d_chain;
  // witnesses[i - 1] writes a_i / d_i over (a_0, ..., a_{i-1}) / d_{i-1},
  // for each 0-based position i >= 1.
  std::vector<Factorization> witnesses;
};

struct NotTelescopic {
  size_t failing_index = 0;  // 1-based position of the first failure
  Int scaled_value = 0;      // a_i / d_i at that position
};

using TelescopicResult = std::variant<TelescopicCertificate, NotTelescopic>;

// Requires gcd 1, at least two entries and no repeated entries.
TelescopicResult IsTelescopic(const GeneratorSequence& seq);

inline bool Telescopic(const TelescopicResult& r) {
  return std::holds_alternative<TelescopicCertificate>(r);
}

// Re-evaluates every witness against its scaled prefix.
bool VerifyCertificate(const TelescopicCertificate& cert);

struct CStarConstants {
  std::vector<Int> cstars;           // c*_2, ..., c*_e
  std::vector<Factorization> reps;   // reps[i] writes c*_{i+2} n_{i+2} over
                                     // the preceding generators
};

inline constexpr Int kDefaultCStarCeiling = Int{1} << 32;

// c*_i = min{k >= 1 : k n_i in <n_1, ..., n_{i-1}>}. The arrangement must
// be a minimal system of generators with gcd 1. The search never needs
// more than n_1 steps; `ceiling` caps it further.
CStarConstants ComputeCStar(const GeneratorSequence& arrangement,
                            Int ceiling = kDefaultCStarCeiling);

struct FreeDecomposition {
  GeneratorSequence arrangement;
  std::vector<Int> cstars;
  std::vector<Factorization> reps;
};

struct NotFree {
  std::vector<Int> cstars;
  Int cstar_product = 0;
};

using FreenessResult = std::variant<FreeDecomposition, NotFree>;

// Free for this arrangement iff n_1 equals the product of the c*.
FreenessResult IsFree(const GeneratorSequence& arrangement);

// Throws InvariantViolation unless n_1 = prod c*_i and every rep evaluates
// to c*_i n_i.
void CheckDecomposition(const FreeDecomposition& fd);

Int FreeFrobenius(const FreeDecomposition& fd);

// Elements sum lambda_j n_j with 0 <= lambda_j < c*_j, lambda_2 varying
// slowest.
std::vector<Int> FreeAperyElements(const FreeDecomposition& fd);
AperySet FreeApery(const FreeDecomposition& fd);

// Re-indexes a list of Apery elements by residue. A repeated residue or a
// wrong count is an InvariantViolation.
AperySet IndexByResidue(std::span<const Int> elements, Int anchor);

// Pairs (c*_i x_i, rep_i) over the arrangement coordinates, i = 2..e.
Presentation FreePresentation(const FreeDecomposition& fd);

std::set<Int> FreeBetti(const FreeDecomposition& fd);

// d F(a1/d, a2/d, a3) + (d - 1) a3 with d = gcd(a1, a2); the inner number
// comes from the oracle.
Int JohnsonReduce(Int a1, Int a2, Int a3);

struct ReductionTrace {
  Int frobenius = 0;
  int reductions = 0;    // applications of the gcd reduction
  int dropped = 0;       // redundant generators removed along the way
  int oracle_calls = 0;  // fallbacks when no reduction applied
};

// Recursive Brauer-Shockley evaluation with a Sylvester base case. The
// reduced generator is the last entry whose complement has gcd > 1
// (scanning from the back); redundant generators are dropped largest
// first after each step.
ReductionTrace BrauerShockleyTrace(const GeneratorSequence& seq);
Int BrauerShockleyFrobenius(const GeneratorSequence& seq);

}  // namespace numsg

#endif  // NUMSG_TELESCOPIC_H_
