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

#include "numsg/figurate.h"

#include <algorithm>
#include <string>

#include "numsg/telescopic.h"

namespace numsg {

namespace {

void RequireIndex(Int n) {
  if (n < 1) throw InvalidInputError("figurate index must be >= 1");
}

void RequireTriangularStructure(Int n) {
  RequireIndex(n);
  if (n < 3) throw ReducedEmbeddingError("triangular n = " + std::to_string(n));
}

void RequireTetrahedralStructure(Int n) {
  RequireIndex(n);
  if (n < 4) throw ReducedEmbeddingError("tetrahedral n = " + std::to_string(n));
}

int Mod6(Int n) { return static_cast<int>(n % 6); }

// a * x_index in paper coordinates (x_1 is the smallest generator).
struct Term {
  Wide coefficient;
  int index;
};

// Builds a relation over the canonical arrangement. In paper coordinates
// x_j is the j-th smallest generator; a reversed arrangement stores it at
// position e - j.
Relation MakeRelation(std::initializer_list<Term> lhs,
                      std::initializer_list<Term> rhs, size_t e,
                      bool reversed) {
  auto place = [&](std::initializer_list<Term> terms) {
    Factorization u(e, 0);
    for (const Term& t : terms) {
      const size_t j = static_cast<size_t>(t.index - 1);
      u[reversed ? e - 1 - j : j] += t.coefficient.ToInt();
    }
    return u;
  };
  return {place(lhs), place(rhs)};
}

Wide Half(Wide x) { return x.DivExact(2, "coefficient / 2"); }
Wide Third(Wide x) { return x.DivExact(3, "coefficient / 3"); }
Wide Sixth(Wide x) { return x.DivExact(6, "coefficient / 6"); }

ClosedFormApery BuildApery(Int anchor, std::vector<Int> params,
                           std::vector<Int> bounds) {
  ClosedFormApery ap;
  ap.anchor = anchor;
  ap.parameter_generators = std::move(params);
  ap.upper_bounds = std::move(bounds);
  std::vector<Int> elements{0};
  for (size_t j = 0; j < ap.parameter_generators.size(); ++j) {
    std::vector<Int> next;
    for (Int base : elements) {
      for (Int c = 0; c <= ap.upper_bounds[j]; ++c) {
        next.push_back(
            CheckedAdd(base, CheckedMul(c, ap.parameter_generators[j])));
      }
    }
    elements = std::move(next);
  }
  ap.in_parameter_order = std::move(elements);
  ap.by_residue = IndexByResidue(ap.in_parameter_order, anchor);
  return ap;
}

// The printed coefficient ranges must equal c*_j - 1 for the matching
// arrangement position; positions[j] names the c* index (0-based into
// cstars) that bounds parameter j.
void CheckRangesAgainstCStar(const ClosedFormApery& ap,
                             const std::vector<Int>& cstars,
                             const std::vector<size_t>& positions) {
  for (size_t j = 0; j < positions.size(); ++j) {
    if (ap.upper_bounds[j] != cstars[positions[j]] - 1) {
      throw InvariantViolation("Apery range " + std::to_string(j) + " is " +
                               std::to_string(ap.upper_bounds[j]) +
                               " but c* - 1 is " +
                               std::to_string(cstars[positions[j]] - 1));
    }
  }
}

}  // namespace

std::string_view ToString(Direction d) {
  return d == Direction::kForward ? "forward" : "reverse";
}

std::string_view ToString(Choose4Class c) {
  switch (c) {
    case Choose4Class::kForward:
      return "forward";
    case Choose4Class::kReverse:
      return "reverse";
    case Choose4Class::kBoth:
      return "both";
    case Choose4Class::kNeither:
      return "neither";
  }
  return "neither";
}

TriangularTriple TriangularTriple::Make(Int n) {
  RequireIndex(n);
  return {n, {Triangular(n), Triangular(CheckedAdd(n, 1)),
              Triangular(CheckedAdd(n, 2))}};
}

GeneratorSequence TriangularTriple::Sequence() const {
  return GeneratorSequence({generators.begin(), generators.end()});
}

TetrahedralQuadruple TetrahedralQuadruple::Make(Int n) {
  RequireIndex(n);
  return {n,
          {Tetrahedral(n), Tetrahedral(CheckedAdd(n, 1)),
           Tetrahedral(CheckedAdd(n, 2)), Tetrahedral(CheckedAdd(n, 3))},
          Mod6(n)};
}

GeneratorSequence TetrahedralQuadruple::Sequence() const {
  return GeneratorSequence({generators.begin(), generators.end()});
}

Int TriangularPairGcd(Int n) {
  RequireIndex(n);
  return n % 2 == 1 ? (n + 1) / 2 : CheckedAdd(n, 1);
}

Int TetrahedralPairGcd(Int n) {
  RequireIndex(n);
  const Wide k = n / 6;
  Wide g;
  switch (Mod6(n)) {
    case 0: g = (k * 6 + 1) * (k * 3 + 1); break;
    case 1: g = (k * 3 + 1) * (k * 2 + 1); break;
    case 2: g = (k * 2 + 1) * (k * 3 + 2); break;
    case 3: g = (k * 3 + 2) * (k * 6 + 5); break;
    case 4: g = (k * 6 + 5) * (k + 1); break;
    default: g = (k + 1) * (k * 6 + 7); break;
  }
  return g.ToInt();
}

Int FrobeniusTriangularCaseForm(Int n) {
  RequireIndex(n);
  Triangular(CheckedAdd(n, 2));  // bounds n so the cubic fits in 128 bits
  const Wide w = n;
  const Wide cube = w * w * w;
  const Wide square = w * w;
  if (n % 2 == 1) {
    return (cube * 3 + square * 6 - w * 3 - 10).DivExact(4, "odd case").ToInt();
  }
  return (cube * 3 + square * 9 + w * 6 - 4).DivExact(4, "even case").ToInt();
}

Int FrobeniusTriangularFloorForm(Int n) {
  const TriangularTriple t = TriangularTriple::Make(n);
  const Wide sum = Wide(t.generators[0]) + t.generators[1] + t.generators[2];
  return (Wide(n / 2) * (sum - 1) - 1).ToInt();
}

Int FrobeniusTriangular(Int n) {
  const Int cases = FrobeniusTriangularCaseForm(n);
  const Int floor_form = FrobeniusTriangularFloorForm(n);
  if (cases != floor_form) {
    throw InvariantViolation("triangular Frobenius forms disagree at n = " +
                             std::to_string(n));
  }
  return cases;
}

Int BakerSignedForm(Int n) {
  RequireIndex(n);
  Triangular(CheckedAdd(n, 2));
  const Wide w = n;
  const Wide sign = n % 2 == 0 ? 1 : -1;
  const Wide numerator = Wide(-14) + sign * 6 + (sign * 9 + 3) * w +
                         (sign + 5) * 3 * w * w + w * w * w * 6;
  return numerator.DivExact(8, "Baker signed form").ToInt();
}

Int BakerParityForm(Int n) {
  RequireIndex(n);
  Triangular(CheckedAdd(n, 2));
  const Wide w = n;
  const Wide cube = w * w * w;
  if (n % 2 == 0) {
    return (cube * 6 + w * w * 18 + w * 12 - 8)
        .DivExact(8, "Baker even form")
        .ToInt();
  }
  return (cube * 6 + w * w * 12 - w * 6 - 20)
      .DivExact(8, "Baker odd form")
      .ToInt();
}

Int BakerA(Int n) {
  const Int signed_form = BakerSignedForm(n);
  if (signed_form != BakerParityForm(n)) {
    throw InvariantViolation("Baker forms disagree at n = " + std::to_string(n));
  }
  return signed_form;
}

Int FrobeniusTetrahedral(Int n) {
  const TetrahedralQuadruple q = TetrahedralQuadruple::Make(n);
  const Wide th0 = q.generators[0], th1 = q.generators[1],
             th2 = q.generators[2], th3 = q.generators[3];
  const Wide w = n;
  Wide f;
  switch (q.residue_class) {
    case 0:
      f = Third(w - 3) * th1 + w * th2 + Half(w) * th3 - th0;
      break;
    case 1:
      f = (w - 1) * th1 + Half(w - 1) * th2 + Third(w - 1) * th3 - th0;
      break;
    case 2:
      f = (w - 1) * th1 + Third(w - 2) * th2 + Half(w) * th3 - th0;
      break;
    case 3:
      f = Third(w - 3) * th1 + Half(w - 1) * th2 + (w + 1) * th3 - th0;
      break;
    case 4:
      f = Third(w + 2) * th2 + Half(w + 2) * th1 + (w + 2) * th0 - th3;
      break;
    default:
      f = (w + 4) * th2 + Third(w + 1) * th1 + Half(w + 1) * th0 - th3;
      break;
  }
  return f.ToInt();
}

Int BrauerArithmeticFrobenius(Int n, Int k) {
  if (k < 2) throw InvalidInputError("arithmetic run needs k >= 2");
  if (n < 2 || k > n) {
    throw InvalidInputError("arithmetic run needs 2 <= k <= n");
  }
  return ((Wide((n - 2) / (k - 1)) + 1) * n - 1).ToInt();
}

Direction TriangularDirection(Int n) {
  RequireIndex(n);
  return Direction::kForward;
}

Direction TetrahedralDirection(Int n) {
  RequireIndex(n);
  return Mod6(n) >= 4 ? Direction::kReverse : Direction::kForward;
}

GeneratorSequence TriangularArrangement(Int n) {
  return TriangularTriple::Make(n).Sequence();
}

GeneratorSequence TetrahedralArrangement(Int n) {
  GeneratorSequence seq = TetrahedralQuadruple::Make(n).Sequence();
  return TetrahedralDirection(n) == Direction::kForward ? seq : seq.Reversed();
}

ClosedFormCStar TriangularCStar(Int n) {
  RequireTriangularStructure(n);
  std::vector<Int> c;
  if (n % 2 == 1) {
    c = {n, (n + 1) / 2};
  } else {
    c = {n / 2, n + 1};
  }
  return {TriangularArrangement(n), std::move(c)};
}

ClosedFormCStar TetrahedralCStar(Int n) {
  RequireTetrahedralStructure(n);
  const Wide w = n;
  std::vector<Wide> c;
  switch (Mod6(n)) {
    case 0: c = {Third(w), w + 1, Half(w + 2)}; break;
    case 1: c = {w, Half(w + 1), Third(w + 2)}; break;
    case 2: c = {w, Third(w + 1), Half(w + 2)}; break;
    case 3: c = {Third(w), Half(w + 1), w + 2}; break;
    case 4: c = {Third(w + 5), Half(w + 4), w + 3}; break;
    default: c = {w + 5, Third(w + 4), Half(w + 3)}; break;
  }
  std::vector<Int> cstars;
  for (const Wide& x : c) cstars.push_back(x.ToInt());
  return {TetrahedralArrangement(n), std::move(cstars)};
}

Presentation TriangularPresentation(Int n) {
  RequireTriangularStructure(n);
  const Wide w = n;
  if (n % 2 == 1) {
    return {MakeRelation({{Half(w + 1), 3}}, {{Half(w + 3), 2}}, 3, false),
            MakeRelation({{w, 2}}, {{w + 2, 1}}, 3, false)};
  }
  return {MakeRelation({{w + 1, 3}}, {{w + 3, 2}}, 3, false),
          MakeRelation({{Half(w), 2}}, {{Half(w + 2), 1}}, 3, false)};
}

Presentation TetrahedralPresentation(Int n) {
  RequireTetrahedralStructure(n);
  const Wide w = n;
  const bool rev = TetrahedralDirection(n) == Direction::kReverse;
  switch (Mod6(n)) {
    case 0:
      return {MakeRelation({{Half(w + 2), 4}}, {{2, 3}, {Half(w + 4), 2}}, 4, rev),
              MakeRelation({{w + 1, 3}}, {{w + 4, 2}}, 4, rev),
              MakeRelation({{Third(w), 2}}, {{Third(w + 3), 1}}, 4, rev)};
    case 1:
      return {MakeRelation({{Third(w + 2), 4}}, {{Third(w + 5), 3}}, 4, rev),
              MakeRelation({{Half(w + 1), 3}}, {{2, 2}, {Half(w + 3), 1}}, 4, rev),
              MakeRelation({{w, 2}}, {{w + 3, 1}}, 4, rev)};
    case 2:
      return {MakeRelation({{Half(w + 2), 4}}, {{2, 3}, {Half(w + 4), 2}}, 4, rev),
              MakeRelation({{Third(w + 1), 3}}, {{Third(w + 4), 2}}, 4, rev),
              MakeRelation({{w, 2}}, {{w + 3, 1}}, 4, rev)};
    case 3:
      return {MakeRelation({{w + 2, 4}}, {{w + 5, 3}}, 4, rev),
              MakeRelation({{Half(w + 1), 3}}, {{2, 2}, {Half(w + 3), 1}}, 4, rev),
              MakeRelation({{Third(w), 2}}, {{Third(w + 3), 1}}, 4, rev)};
    case 4:
      return {MakeRelation({{w + 3, 1}}, {{w, 2}}, 4, rev),
              MakeRelation({{Half(w + 4), 2}},
                           {{Third(w - 1), 3}, {Sixth(w + 2), 4}}, 4, rev),
              MakeRelation({{Third(w + 5), 3}}, {{Third(w + 2), 4}}, 4, rev)};
    default:
      return {MakeRelation({{Half(w + 3), 1}},
                           {{Third(w - 2), 2}, {Sixth(w + 1), 3}}, 4, rev),
              MakeRelation({{Third(w + 4), 2}}, {{Third(w + 1), 3}}, 4, rev),
              MakeRelation({{w + 5, 3}}, {{w + 2, 4}}, 4, rev)};
  }
}

std::set<Int> TriangularBetti(Int n) {
  RequireTriangularStructure(n);
  const Wide c3 = Binomial(n + 3, 3);
  const Wide c2 = Binomial(n + 2, 3);
  if (n % 2 == 1) {
    return {Half(c3 * 3).ToInt(), (c2 * 3).ToInt()};
  }
  return {(c3 * 3).ToInt(), Half(c2 * 3).ToInt()};
}

std::set<Int> TetrahedralBetti(Int n) {
  RequireTetrahedralStructure(n);
  const Wide c5 = Binomial(n + 5, 4);
  const Wide c4 = Binomial(n + 4, 4);
  const Wide c3 = Binomial(n + 3, 4);
  auto four_thirds = [](Wide c) { return Third(c * 4); };
  std::array<Wide, 3> b;
  switch (Mod6(n)) {
    case 0: b = {c5 * 2, c4 * 4, four_thirds(c3)}; break;
    case 1: b = {four_thirds(c5), c4 * 2, c3 * 4}; break;
    case 2: b = {c5 * 2, four_thirds(c4), c3 * 4}; break;
    case 3: b = {c5 * 4, c4 * 2, four_thirds(c3)}; break;
    case 4: b = {four_thirds(c5), c4 * 2, c3 * 4}; break;
    default: b = {c5 * 4, four_thirds(c4), c3 * 2}; break;
  }
  return {b[0].ToInt(), b[1].ToInt(), b[2].ToInt()};
}

ClosedFormApery TriangularApery(Int n) {
  RequireTriangularStructure(n);
  const TriangularTriple t = TriangularTriple::Make(n);
  std::vector<Int> bounds;
  if (n % 2 == 1) {
    bounds = {n - 1, (n - 1) / 2};
  } else {
    bounds = {(n - 2) / 2, n};
  }
  ClosedFormApery ap =
      BuildApery(t.generators[0], {t.generators[1], t.generators[2]}, bounds);
  CheckRangesAgainstCStar(ap, TriangularCStar(n).cstars, {0, 1});
  return ap;
}

ClosedFormApery TetrahedralApery(Int n) {
  RequireTetrahedralStructure(n);
  const TetrahedralQuadruple q = TetrahedralQuadruple::Make(n);
  const auto& g = q.generators;
  const Wide w = n;
  std::vector<Wide> bounds;
  ClosedFormApery ap;
  switch (q.residue_class) {
    case 0: bounds = {Third(w - 3), w, Half(w)}; break;
    case 1: bounds = {w - 1, Half(w - 1), Third(w - 1)}; break;
    case 2: bounds = {w - 1, Third(w - 2), Half(w)}; break;
    case 3: bounds = {Third(w - 3), Half(w - 1), w + 1}; break;
    case 4: bounds = {w + 2, Half(w + 2), Third(w + 2)}; break;
    default: bounds = {Half(w + 1), Third(w + 1), w + 4}; break;
  }
  std::vector<Int> ranges;
  for (const Wide& b : bounds) ranges.push_back(b.ToInt());
  const auto cstars = TetrahedralCStar(n).cstars;
  if (q.residue_class < 4) {
    ap = BuildApery(g[0], {g[1], g[2], g[3]}, ranges);
    CheckRangesAgainstCStar(ap, cstars, {0, 1, 2});
  } else {
    // Anchor TH_{n+3}; the parameters TH_n, TH_{n+1}, TH_{n+2} sit at
    // arrangement positions 4, 3, 2.
    ap = BuildApery(g[3], {g[0], g[1], g[2]}, ranges);
    CheckRangesAgainstCStar(ap, cstars, {2, 1, 0});
  }
  return ap;
}

GeneratorSequence Choose4Sequence(Int n) {
  RequireIndex(n);
  std::vector<Int> seq;
  for (Int j = 3; j <= 7; ++j) seq.push_back(Binomial(CheckedAdd(n, j), 4));
  return GeneratorSequence(std::move(seq));
}

Choose4Class Choose4Report::classification() const {
  if (forward && reverse) return Choose4Class::kBoth;
  if (forward) return Choose4Class::kForward;
  if (reverse) return Choose4Class::kReverse;
  return Choose4Class::kNeither;
}

bool Choose4Report::MatchesClaim() const {
  if (forward != expected_forward) return false;
  return !reverse_asserted || reverse == expected_reverse;
}

Choose4Report Choose4Family(Int n) {
  Choose4Report r;
  r.n = n;
  r.sequence = Choose4Sequence(n);
  r.forward = Telescopic(IsTelescopic(r.sequence));
  r.reverse = Telescopic(IsTelescopic(r.sequence.Reversed()));
  const int x = Mod6(n);
  const bool small = n >= 3 && n <= 5;
  r.expected_forward = x <= 2 || small;
  r.expected_reverse = x >= 3;
  r.reverse_asserted = n >= 9 || small;
  return r;
}

PermutationReport TelescopicPermutations(const GeneratorSequence& seq) {
  if (seq.size() > kMaxPermutationLength) {
    throw InvalidInputError("permutation sweep supports at most " +
                            std::to_string(kMaxPermutationLength) + " entries");
  }
  std::vector<Int> perm = seq.vec();
  std::sort(perm.begin(), perm.end());
  PermutationReport report;
  do {
    PermutationOutcome outcome;
    outcome.permutation = perm;
    const TelescopicResult result = IsTelescopic(GeneratorSequence(perm));
    if (const auto* failure = std::get_if<NotTelescopic>(&result)) {
      outcome.failing_index = failure->failing_index;
    } else {
      outcome.telescopic = true;
      ++report.telescopic_count;
    }
    report.outcomes.push_back(std::move(outcome));
  } while (std::next_permutation(perm.begin(), perm.end()));
  report.total = report.outcomes.size();
  return report;
}

GeneratorSequence Choose5Sequence() {
  std::vector<Int> seq;
  for (Int top = 12; top <= 17; ++top) seq.push_back(Binomial(top, 5));
  return GeneratorSequence(std::move(seq));
}

PermutationReport Choose5Counterexample() {
  return TelescopicPermutations(Choose5Sequence());
}

int FigurateEmbeddingDimension(Family family, Int n) {
  RequireIndex(n);
  if (family == Family::kTriangular) {
    return n >= 3 ? 3 : static_cast<int>(n);
  }
  if (n == 1) return 1;
  return n <= 3 ? 3 : 4;
}

}  // namespace numsg
