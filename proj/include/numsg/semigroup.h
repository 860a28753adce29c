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

// Generic numerical-semigroup engine. Everything here works from the
// generators alone and serves as the brute-force ground truth for the
// closed forms in figurate.h and the fast paths in telescopic.h.

#ifndef NUMSG_SEMIGROUP_H_
#define NUMSG_SEMIGROUP_H_

#include <memory>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "numsg/arith.h"

namespace numsg {

// An ordered, non-empty list of positive integers. Order matters for
// telescopic analysis, so nothing here sorts or deduplicates.
class GeneratorSequence {
 public:
  explicit GeneratorSequence(std::vector<Int> entries);
  GeneratorSequence(std::initializer_list<Int> entries)
      : GeneratorSequence(std::vector<Int>(entries)) {}

  std::span<const Int> entries() const { return entries_; }
  const std::vector<Int>& vec() const { return entries_; }
  size_t size() const { return entries_.size(); }
  Int operator[](size_t i) const { return entries_[i]; }
  bool HasDuplicates() const;
  GeneratorSequence Reversed() const;

  bool operator==(const GeneratorSequence&) const = default;

 private:
  std::vector<Int> entries_;
};

// Multiplicities, one per generator.
using Factorization = std::vector<Int>;

// Sum of coefficient * generator, overflow-checked.
Int Evaluate(const Factorization& u, std::span<const Int> gens);

// elements[r] is the least semigroup element congruent to r mod anchor.
struct AperySet {
  Int anchor = 1;
  std::vector<Int> elements;

  Int Max() const;
  bool operator==(const AperySet&) const = default;
};

// Membership in the monoid generated by an arbitrary set of positive
// integers (the gcd may exceed 1). Builds the table of least elements per
// residue of the smallest generator once; modulus above kMaxTableModulus
// switches to a bounded coefficient search per query.
class MonoidMembership {
 public:
  static constexpr Int kMaxTableModulus = Int{1} << 22;
  static constexpr Int kUnreachable = -1;

  explicit MonoidMembership(std::span<const Int> gens);

  bool Contains(Int x) const;
  Int modulus() const { return modulus_; }
  bool has_table() const { return !least_.empty(); }
  // Least element per residue class, kUnreachable where the class is empty.
  const std::vector<Int>& least() const { return least_; }

 private:
  std::vector<Int> gens_;
  Int gcd_ = 1;
  Int modulus_ = 1;
  std::vector<Int> least_;
};

// Least element of <gens> in each residue class mod `modulus`, by Dijkstra
// relaxation over the residue graph. Empty classes hold kUnreachable.
std::vector<Int> ResidueMinima(std::span<const Int> gens, Int modulus);

class NumericalSemigroup {
 public:
  // Reduces to the minimal system of generators, sorted ascending.
  // Throws NotNumericalSemigroupError when the gcd exceeds 1.
  static NumericalSemigroup FromGenerators(const GeneratorSequence& gens);

  std::span<const Int> generators() const { return gens_; }
  Int multiplicity() const { return gens_.front(); }
  int embedding_dimension() const { return static_cast<int>(gens_.size()); }

  bool Contains(Int x) const;
  // Ap(S, m) for m the multiplicity, computed once and shared by copies.
  const AperySet& AperyOfMultiplicity() const;
  // -1 for the semigroup of all non-negative integers.
  Int Frobenius() const;

 private:
  struct Cache;
  explicit NumericalSemigroup(std::vector<Int> gens);

  std::vector<Int> gens_;
  std::shared_ptr<Cache> cache_;
};

NumericalSemigroup MinimalGenerators(const GeneratorSequence& gens);
bool Contains(const NumericalSemigroup& s, Int x);
int EmbeddingDimension(const NumericalSemigroup& s);

// Lexicographically least coefficient vector (first coefficient smallest,
// then the second, ...) with sum x, or nullopt when x is not representable.
std::optional<Factorization> Representation(Int x, std::span<const Int> gens);

// Throws InvalidInputError when m is not a positive element of S.
AperySet AperyOracle(const NumericalSemigroup& s, Int m);

// max(Ap(S, min gen)) - min gen; -1 when 1 generates.
Int FrobeniusOracle(std::span<const Int> gens);
inline Int FrobeniusOracle(const GeneratorSequence& gens) {
  return FrobeniusOracle(gens.entries());
}

// Enumerates every factorization of s over a fixed generator list by
// depth-first search. Reachability of each partial remainder is checked
// against the suffix monoids so dead branches are cut immediately.
class FactorizationEnumerator {
 public:
  explicit FactorizationEnumerator(std::span<const Int> gens);

  // Deterministic lexicographic order.
  std::vector<Factorization> All(Int s) const;
  // Stops after `limit` factorizations.
  std::vector<Factorization> AtMost(Int s, size_t limit) const;

 private:
  void Walk(size_t index, Int remaining, Factorization& current,
            std::vector<Factorization>& out, size_t limit) const;

  std::vector<Int> gens_;
  std::vector<MonoidMembership> suffix_;
};

std::vector<Factorization> Factorizations(const NumericalSemigroup& s, Int x);

// Connected components of the factorizations of s under shared support.
struct RsPartition {
  Int value = 0;
  std::vector<std::vector<Factorization>> classes;
};

RsPartition PartitionFactorizations(std::vector<Factorization> factorizations,
                                    Int value);
// Throws InvalidInputError when s is not in S.
RsPartition RsClasses(const NumericalSemigroup& s, Int x);

// Frobenius + largest + second-largest generator.
Int BettiSearchBound(const NumericalSemigroup& s);

// Elements up to the bound whose factorizations split into two or more
// classes. Desk-scale only: embedding dimension at most kMaxBettiDimension.
inline constexpr int kMaxBettiDimension = 6;
std::set<Int> BettiOracle(const NumericalSemigroup& s,
                          std::optional<Int> bound_override = std::nullopt);

// One relation (lhs, rhs) of a presentation; both sides evaluate equal.
struct Relation {
  Factorization lhs;
  Factorization rhs;
  bool operator==(const Relation&) const = default;
};
using Presentation = std::vector<Relation>;

// Minimal presentation assembled from the R_s classes of every Betti
// element: the first class representative paired with each other one.
Presentation MinimalPresentationOracle(
    const NumericalSemigroup& s,
    std::optional<Int> bound_override = std::nullopt);

}  // namespace numsg

#endif  // NUMSG_SEMIGROUP_H_
