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

#include "numsg/telescopic.h"

#include <algorithm>
#include <string>

namespace numsg {

namespace {

void RequireCoprime(std::span<const Int> xs) {
  const Int d = GcdList(xs);
  if (d != 1) throw NotNumericalSemigroupError(d);
}

void RequireMinimalArrangement(const GeneratorSequence& arrangement) {
  RequireCoprime(arrangement.entries());
  if (arrangement.HasDuplicates()) {
    throw InvalidInputError("arrangement has repeated generators");
  }
  const auto s = NumericalSemigroup::FromGenerators(arrangement);
  if (static_cast<size_t>(s.embedding_dimension()) != arrangement.size()) {
    throw InvalidInputError("arrangement is not a minimal system of generators");
  }
}

Wide ProductOf(std::span<const Int> xs) {
  Wide p = 1;
  for (Int x : xs) p = p * x;
  return p;
}

// Removes the largest generator representable over the others until none
// is left. Duplicates count as redundant.
int DropRedundant(std::vector<Int>& gens) {
  int dropped = 0;
  while (gens.size() > 1) {
    std::optional<size_t> victim;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (victim && gens[i] < gens[*victim]) continue;
      std::vector<Int> others;
      for (size_t j = 0; j < gens.size(); ++j) {
        if (j != i) others.push_back(gens[j]);
      }
      if (MonoidMembership(others).Contains(gens[i])) victim = i;
    }
    if (!victim) break;
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(*victim));
    ++dropped;
  }
  return dropped;
}

Wide Reduce(std::vector<Int> gens, ReductionTrace& trace) {
  trace.dropped += DropRedundant(gens);
  if (gens.size() == 1) return -1;  // only <1> survives with gcd 1
  if (gens.size() == 2) {
    return Wide(gens[0]) * gens[1] - gens[0] - gens[1];
  }
  for (size_t j = gens.size(); j-- > 0;) {
    Int d = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i != j) d = detail::GcdOrZero(d, gens[i]);
    }
    if (d == 1) continue;
    std::vector<Int> inner;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i != j) inner.push_back(gens[i] / d);
    }
    inner.push_back(gens[j]);
    ++trace.reductions;
    return Wide(d) * Reduce(std::move(inner), trace) + Wide(d - 1) * gens[j];
  }
  ++trace.oracle_calls;
  return FrobeniusOracle(gens);
}

}  // namespace

std::vector<Int> DivideChain(const GeneratorSequence& seq) {
  std::vector<Int> chain;
  chain.reserve(seq.size());
  Int d = 0;
  for (Int a : seq.entries()) {
    d = detail::GcdOrZero(d, a);
    chain.push_back(d);
  }
  return chain;
}

TelescopicResult IsTelescopic(const GeneratorSequence& seq) {
  if (seq.size() < 2) {
    throw InvalidInputError("telescopic test needs at least two entries");
  }
  RequireCoprime(seq.entries());
  if (seq.HasDuplicates()) {
    throw InvalidInputError("telescopic test rejects repeated entries");
  }
  TelescopicCertificate cert{seq, DivideChain(seq), {}};
  for (size_t i = 1; i < seq.size(); ++i) {
    std::vector<Int> prefix;
    for (size_t j = 0; j < i; ++j) prefix.push_back(seq[j] / cert.d_chain[i - 1]);
    const Int target = seq[i] / cert.d_chain[i];
    auto witness = Representation(target, prefix);
    if (!witness) return NotTelescopic{i + 1, target};
    cert.witnesses.push_back(std::move(*witness));
  }
  return cert;
}

bool VerifyCertificate(const TelescopicCertificate& cert) {
  const auto& seq = cert.sequence;
  if (cert.d_chain != DivideChain(seq) || cert.d_chain.back() != 1) return false;
  if (cert.witnesses.size() + 1 != seq.size()) return false;
  for (size_t i = 1; i < seq.size(); ++i) {
    if (cert.d_chain[i - 1] % cert.d_chain[i] != 0) return false;
    std::vector<Int> prefix;
    for (size_t j = 0; j < i; ++j) prefix.push_back(seq[j] / cert.d_chain[i - 1]);
    const auto& w = cert.witnesses[i - 1];
    if (w.size() != prefix.size()) return false;
    if (std::any_of(w.begin(), w.end(), [](Int c) { return c < 0; })) {
      return false;
    }
    if (Evaluate(w, prefix) != seq[i] / cert.d_chain[i]) return false;
  }
  return true;
}

CStarConstants ComputeCStar(const GeneratorSequence& arrangement, Int ceiling) {
  RequireMinimalArrangement(arrangement);
  CStarConstants out;
  const auto gens = arrangement.entries();
  const Int limit = std::min(ceiling, gens[0]);
  for (size_t i = 1; i < gens.size(); ++i) {
    const auto prefix = gens.first(i);
    const MonoidMembership membership(prefix);
    Int k = 1;
    while (!membership.Contains(CheckedMul(k, gens[i]))) {
      if (++k > limit) {
        throw SearchLimitError("c* search for " + std::to_string(gens[i]) +
                               " exceeded ceiling " + std::to_string(limit));
      }
    }
    out.cstars.push_back(k);
    out.reps.push_back(*Representation(k * gens[i], prefix));
  }
  return out;
}

FreenessResult IsFree(const GeneratorSequence& arrangement) {
  CStarConstants c = ComputeCStar(arrangement);
  const Wide product = ProductOf(c.cstars);
  if (product == Wide(arrangement[0])) {
    return FreeDecomposition{arrangement, std::move(c.cstars), std::move(c.reps)};
  }
  NotFree nf;
  nf.cstars = std::move(c.cstars);
  nf.cstar_product = product.ToInt();
  return nf;
}

void CheckDecomposition(const FreeDecomposition& fd) {
  const auto gens = fd.arrangement.entries();
  if (fd.cstars.size() + 1 != gens.size() || fd.reps.size() != fd.cstars.size()) {
    throw InvariantViolation("decomposition sizes do not match the arrangement");
  }
  if (!(ProductOf(fd.cstars) == Wide(gens[0]))) {
    throw InvariantViolation("n_1 differs from the product of c* constants");
  }
  for (size_t i = 0; i < fd.cstars.size(); ++i) {
    if (Evaluate(fd.reps[i], gens.first(i + 1)) !=
        CheckedMul(fd.cstars[i], gens[i + 1])) {
      throw InvariantViolation("rep " + std::to_string(i + 2) +
                               " does not evaluate to c* n_i");
    }
  }
}

Int FreeFrobenius(const FreeDecomposition& fd) {
  CheckDecomposition(fd);
  const auto gens = fd.arrangement.entries();
  Wide f = -Wide(gens[0]);
  for (size_t i = 0; i < fd.cstars.size(); ++i) {
    f = f + Wide(fd.cstars[i] - 1) * gens[i + 1];
  }
  return f.ToInt();
}

std::vector<Int> FreeAperyElements(const FreeDecomposition& fd) {
  CheckDecomposition(fd);
  const auto gens = fd.arrangement.entries();
  std::vector<Int> elements{0};
  // Appending the innermost coordinate last keeps lambda_2 slowest.
  for (size_t i = 0; i < fd.cstars.size(); ++i) {
    std::vector<Int> next;
    next.reserve(elements.size() * static_cast<size_t>(fd.cstars[i]));
    for (Int base : elements) {
      for (Int lambda = 0; lambda < fd.cstars[i]; ++lambda) {
        next.push_back(CheckedAdd(base, CheckedMul(lambda, gens[i + 1])));
      }
    }
    elements = std::move(next);
  }
  return elements;
}

AperySet IndexByResidue(std::span<const Int> elements, Int anchor) {
  if (anchor < 1 || static_cast<Int>(elements.size()) != anchor) {
    throw InvariantViolation("Apery set of " + std::to_string(anchor) +
                             " must have exactly that many elements");
  }
  AperySet ap;
  ap.anchor = anchor;
  ap.elements.assign(elements.size(), MonoidMembership::kUnreachable);
  for (Int e : elements) {
    auto& slot = ap.elements[static_cast<size_t>(e % anchor)];
    if (slot != MonoidMembership::kUnreachable) {
      throw InvariantViolation("duplicate residue " +
                               std::to_string(e % anchor) + " in Apery set");
    }
    slot = e;
  }
  return ap;
}

AperySet FreeApery(const FreeDecomposition& fd) {
  return IndexByResidue(FreeAperyElements(fd), fd.arrangement[0]);
}

Presentation FreePresentation(const FreeDecomposition& fd) {
  CheckDecomposition(fd);
  const size_t e = fd.arrangement.size();
  Presentation p;
  for (size_t i = 0; i < fd.cstars.size(); ++i) {
    Relation r{Factorization(e, 0), Factorization(e, 0)};
    r.lhs[i + 1] = fd.cstars[i];
    std::copy(fd.reps[i].begin(), fd.reps[i].end(), r.rhs.begin());
    p.push_back(std::move(r));
  }
  return p;
}

std::set<Int> FreeBetti(const FreeDecomposition& fd) {
  CheckDecomposition(fd);
  std::set<Int> betti;
  for (size_t i = 0; i < fd.cstars.size(); ++i) {
    betti.insert(CheckedMul(fd.cstars[i], fd.arrangement[i + 1]));
  }
  return betti;
}

Int JohnsonReduce(Int a1, Int a2, Int a3) {
  const std::vector<Int> all{a1, a2, a3};
  RequireCoprime(all);
  const Int d = Gcd(a1, a2);
  const std::vector<Int> inner{a1 / d, a2 / d, a3};
  return (Wide(d) * FrobeniusOracle(inner) + Wide(d - 1) * a3).ToInt();
}

ReductionTrace BrauerShockleyTrace(const GeneratorSequence& seq) {
  if (seq.size() < 2) {
    throw InvalidInputError("Brauer-Shockley reduction needs two generators");
  }
  RequireCoprime(seq.entries());
  ReductionTrace trace;
  trace.frobenius = Reduce(seq.vec(), trace).ToInt();
  return trace;
}

Int BrauerShockleyFrobenius(const GeneratorSequence& seq) {
  return BrauerShockleyTrace(seq).frobenius;
}

}  // namespace numsg
