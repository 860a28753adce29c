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

#include "numsg/semigroup.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <queue>
#include <string>

namespace numsg {

namespace {

// Exhaustive coefficient search; only used when the residue table would be
// too large to build.
bool SearchRepresentable(Int x, std::span<const Int> gens) {
  if (x == 0) return true;
  if (gens.empty()) return false;
  const Int g = gens.front();
  if (gens.size() == 1) return x % g == 0;
  for (Int c = x / g; c >= 0; --c) {
    if (SearchRepresentable(x - c * g, gens.subspan(1))) return true;
  }
  return false;
}

AperySet ComputeApery(std::span<const Int> gens, Int m) {
  AperySet ap;
  ap.anchor = m;
  ap.elements = ResidueMinima(gens, m);
  for (Int e : ap.elements) {
    if (e == MonoidMembership::kUnreachable) {
      throw InvariantViolation("residue class unreachable; gcd exceeds 1");
    }
  }
  return ap;
}

// Union-find over factorization indices.
class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }
  size_t Find(size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

}  // namespace

GeneratorSequence::GeneratorSequence(std::vector<Int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInputError("empty sequence");
  for (Int e : entries_) {
    if (e < 1) {
      throw InvalidInputError("generator " + std::to_string(e) +
                              " is not a positive integer");
    }
  }
}

bool GeneratorSequence::HasDuplicates() const {
  std::vector<Int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

GeneratorSequence GeneratorSequence::Reversed() const {
  return GeneratorSequence(std::vector<Int>(entries_.rbegin(), entries_.rend()));
}

Int Evaluate(const Factorization& u, std::span<const Int> gens) {
  if (u.size() != gens.size()) {
    throw InvalidInputError("factorization length does not match generators");
  }
  Int total = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    total = CheckedAdd(total, CheckedMul(u[i], gens[i]));
  }
  return total;
}

Int AperySet::Max() const {
  return *std::max_element(elements.begin(), elements.end());
}

std::vector<Int> ResidueMinima(std::span<const Int> gens, Int modulus) {
  if (modulus < 1) throw InvalidInputError("modulus must be positive");
  if (modulus > MonoidMembership::kMaxTableModulus) {
    throw SearchLimitError("residue table modulus " + std::to_string(modulus) +
                           " exceeds the table limit");
  }
  const auto m = static_cast<size_t>(modulus);
  std::vector<Int> dist(m, MonoidMembership::kUnreachable);
  using Entry = std::pair<Int, size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (Int g : gens) {
      const size_t next = (r + static_cast<size_t>(g % modulus)) % m;
      const Int nd = CheckedAdd(d, g);
      if (dist[next] == MonoidMembership::kUnreachable || nd < dist[next]) {
        dist[next] = nd;
        queue.emplace(nd, next);
      }
    }
  }
  return dist;
}

MonoidMembership::MonoidMembership(std::span<const Int> gens)
    : gens_(gens.begin(), gens.end()) {
  gcd_ = GcdList(gens_);
  modulus_ = *std::min_element(gens_.begin(), gens_.end());
  if (modulus_ <= kMaxTableModulus) least_ = ResidueMinima(gens_, modulus_);
}

bool MonoidMembership::Contains(Int x) const {
  if (x < 0) return false;
  if (x == 0) return true;
  if (x % gcd_ != 0) return false;
  if (!has_table()) {
    std::vector<Int> desc = gens_;
    std::sort(desc.rbegin(), desc.rend());
    return SearchRepresentable(x, desc);
  }
  const Int least = least_[static_cast<size_t>(x % modulus_)];
  return least != kUnreachable && x >= least;
}

struct NumericalSemigroup::Cache {
  std::once_flag once;
  AperySet apery;
};

NumericalSemigroup::NumericalSemigroup(std::vector<Int> gens)
    : gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}

NumericalSemigroup NumericalSemigroup::FromGenerators(
    const GeneratorSequence& gens) {
  const Int d = GcdList(gens.entries());
  if (d != 1) throw NotNumericalSemigroupError(d);
  std::vector<Int> sorted = gens.vec();
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // A generator can only be produced by smaller ones, so one ascending
  // pass decides minimality.
  std::vector<Int> kept;
  std::optional<MonoidMembership> span_of_kept;
  for (Int x : sorted) {
    if (span_of_kept && span_of_kept->Contains(x)) continue;
    kept.push_back(x);
    span_of_kept.emplace(kept);
  }
  return NumericalSemigroup(std::move(kept));
}

bool NumericalSemigroup::Contains(Int x) const {
  if (x < 0) return false;
  const AperySet& ap = AperyOfMultiplicity();
  return x >= ap.elements[static_cast<size_t>(x % ap.anchor)];
}

const AperySet& NumericalSemigroup::AperyOfMultiplicity() const {
  std::call_once(cache_->once, [this] {
    cache_->apery = ComputeApery(gens_, multiplicity());
  });
  return cache_->apery;
}

Int NumericalSemigroup::Frobenius() const {
  return AperyOfMultiplicity().Max() - multiplicity();
}

NumericalSemigroup MinimalGenerators(const GeneratorSequence& gens) {
  return NumericalSemigroup::FromGenerators(gens);
}

bool Contains(const NumericalSemigroup& s, Int x) { return s.Contains(x); }

int EmbeddingDimension(const NumericalSemigroup& s) {
  return s.embedding_dimension();
}

std::optional<Factorization> Representation(Int x, std::span<const Int> gens) {
  if (x < 0) return std::nullopt;
  if (gens.empty()) {
    if (x == 0) return Factorization{};
    return std::nullopt;
  }
  std::vector<MonoidMembership> suffix;
  suffix.reserve(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) suffix.emplace_back(gens.subspan(i));
  if (!suffix[0].Contains(x)) return std::nullopt;

  Factorization u(gens.size(), 0);
  Int remaining = x;
  for (size_t i = 0; i + 1 < gens.size(); ++i) {
    Int c = 0;
    while (!suffix[i + 1].Contains(remaining - c * gens[i])) ++c;
    u[i] = c;
    remaining -= c * gens[i];
  }
  u.back() = remaining / gens.back();
  return u;
}

AperySet AperyOracle(const NumericalSemigroup& s, Int m) {
  if (m < 1 || !s.Contains(m)) {
    throw InvalidInputError("Apery anchor " + std::to_string(m) +
                            " is not a positive element of the semigroup");
  }
  return ComputeApery(s.generators(), m);
}

Int FrobeniusOracle(std::span<const Int> gens) {
  const Int d = GcdList(gens);
  if (d != 1) throw NotNumericalSemigroupError(d);
  const Int m = *std::min_element(gens.begin(), gens.end());
  return ComputeApery(gens, m).Max() - m;
}

FactorizationEnumerator::FactorizationEnumerator(std::span<const Int> gens)
    : gens_(gens.begin(), gens.end()) {
  if (gens_.empty()) throw InvalidInputError("empty sequence");
  suffix_.reserve(gens_.size());
  for (size_t i = 0; i < gens_.size(); ++i) {
    suffix_.emplace_back(std::span<const Int>(gens_).subspan(i));
  }
}

std::vector<Factorization> FactorizationEnumerator::All(Int s) const {
  return AtMost(s, std::numeric_limits<size_t>::max());
}

std::vector<Factorization> FactorizationEnumerator::AtMost(Int s,
                                                           size_t limit) const {
  std::vector<Factorization> out;
  if (s < 0 || !suffix_[0].Contains(s)) return out;
  Factorization current(gens_.size(), 0);
  Walk(0, s, current, out, limit);
  return out;
}

void FactorizationEnumerator::Walk(size_t index, Int remaining,
                                   Factorization& current,
                                   std::vector<Factorization>& out,
                                   size_t limit) const {
  const Int g = gens_[index];
  if (index + 1 == gens_.size()) {
    if (remaining % g == 0 && out.size() < limit) {
      current[index] = remaining / g;
      out.push_back(current);
      current[index] = 0;
    }
    return;
  }
  for (Int c = 0; c * g <= remaining && out.size() < limit; ++c) {
    const Int rest = remaining - c * g;
    if (!suffix_[index + 1].Contains(rest)) continue;
    current[index] = c;
    Walk(index + 1, rest, current, out, limit);
  }
  current[index] = 0;
}

std::vector<Factorization> Factorizations(const NumericalSemigroup& s, Int x) {
  return FactorizationEnumerator(s.generators()).All(x);
}

RsPartition PartitionFactorizations(std::vector<Factorization> factorizations,
                                    Int value) {
  RsPartition partition;
  partition.value = value;
  if (factorizations.empty()) return partition;
  const size_t dims = factorizations.front().size();
  DisjointSets sets(factorizations.size());
  // Two vectors with a common non-zero coordinate are adjacent; joining
  // every vector to the first one supported on each coordinate yields the
  // same components as the pairwise relation.
  for (size_t j = 0; j < dims; ++j) {
    std::optional<size_t> first;
    for (size_t i = 0; i < factorizations.size(); ++i) {
      if (factorizations[i][j] == 0) continue;
      if (first) {
        sets.Union(*first, i);
      } else {
        first = i;
      }
    }
  }
  std::vector<std::optional<size_t>> class_of_root(factorizations.size());
  for (size_t i = 0; i < factorizations.size(); ++i) {
    const size_t root = sets.Find(i);
    if (!class_of_root[root]) {
      class_of_root[root] = partition.classes.size();
      partition.classes.emplace_back();
    }
    partition.classes[*class_of_root[root]].push_back(
        std::move(factorizations[i]));
  }
  return partition;
}

RsPartition RsClasses(const NumericalSemigroup& s, Int x) {
  if (!s.Contains(x)) {
    throw InvalidInputError(std::to_string(x) + " is not in the semigroup");
  }
  return PartitionFactorizations(Factorizations(s, x), x);
}

Int BettiSearchBound(const NumericalSemigroup& s) {
  const auto gens = s.generators();
  if (gens.size() < 2) return 0;
  return CheckedAdd(CheckedAdd(s.Frobenius(), gens[gens.size() - 1]),
                    gens[gens.size() - 2]);
}

std::set<Int> BettiOracle(const NumericalSemigroup& s,
                          std::optional<Int> bound_override) {
  if (s.embedding_dimension() > kMaxBettiDimension) {
    throw InvalidInputError("Betti oracle supports embedding dimension <= " +
                            std::to_string(kMaxBettiDimension));
  }
  std::set<Int> betti;
  if (s.embedding_dimension() < 2) return betti;
  const Int bound = bound_override ? *bound_override : BettiSearchBound(s);
  FactorizationEnumerator enumerator(s.generators());
  for (Int x = 1; x <= bound; ++x) {
    if (!s.Contains(x)) continue;
    if (enumerator.AtMost(x, 2).size() < 2) continue;
    if (PartitionFactorizations(enumerator.All(x), x).classes.size() >= 2) {
      betti.insert(x);
    }
  }
  return betti;
}

Presentation MinimalPresentationOracle(const NumericalSemigroup& s,
                                       std::optional<Int> bound_override) {
  Presentation presentation;
  FactorizationEnumerator enumerator(s.generators());
  for (Int b : BettiOracle(s, bound_override)) {
    const RsPartition partition = PartitionFactorizations(enumerator.All(b), b);
    for (size_t i = 1; i < partition.classes.size(); ++i) {
      presentation.push_back(
          {partition.classes.front().front(), partition.classes[i].front()});
    }
  }
  return presentation;
}

}  // namespace numsg
