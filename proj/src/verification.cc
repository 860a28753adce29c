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

#include "numsg/verification.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "numsg/figurate.h"
#include "numsg/semigroup.h"
#include "numsg/telescopic.h"

namespace numsg {

namespace {

template <typename T>
std::string Show(const T& values) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << "}";
  return out.str();
}

// Runs `body`; an empty string means success, anything else (including an
// escaped exception) is the failure detail.
void Check(CaseReport& report, std::string name,
           const std::function<std::string()>& body) {
  CheckResult result{std::move(name), false, ""};
  try {
    result.detail = body();
    result.pass = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  report.checks.push_back(std::move(result));
}

std::string ExpectEqual(Int got, Int want, const std::string& what) {
  if (got == want) return "";
  return what + ": " + std::to_string(got) + " != " + std::to_string(want);
}

std::string PresentationEvaluatesEqual(const Presentation& p,
                                       std::span<const Int> gens) {
  for (const Relation& r : p) {
    const Int lhs = Evaluate(r.lhs, gens);
    const Int rhs = Evaluate(r.rhs, gens);
    if (lhs != rhs) {
      return "relation sides " + std::to_string(lhs) + " != " +
             std::to_string(rhs);
    }
  }
  return "";
}

std::set<Int> PresentationValues(const Presentation& p,
                                 std::span<const Int> gens) {
  std::set<Int> values;
  for (const Relation& r : p) values.insert(Evaluate(r.lhs, gens));
  return values;
}

struct ClosedForms {
  ClosedFormCStar cstar;
  Presentation presentation;
  std::set<Int> betti;
  ClosedFormApery apery;
  Int frobenius;
};

// Shared structural checks for a full-dimension family member.
void CheckStructure(CaseReport& report, const ClosedForms& closed,
                    bool run_betti_oracle, std::optional<Int> betti_bound) {
  const GeneratorSequence& arrangement = closed.cstar.arrangement;
  const auto gens = arrangement.entries();
  const auto semigroup = NumericalSemigroup::FromGenerators(arrangement);

  Check(report, "cstar_closed_vs_search", [&] {
    const auto generic = ComputeCStar(arrangement).cstars;
    if (generic == closed.cstar.cstars) return std::string();
    return "closed " + Show(closed.cstar.cstars) + " vs search " + Show(generic);
  });

  const FreenessResult freeness = IsFree(arrangement);
  const auto* fd = std::get_if<FreeDecomposition>(&freeness);
  Check(report, "free_product", [&] {
    if (fd == nullptr) return std::string("arrangement is not free");
    Wide product = 1;
    for (Int c : closed.cstar.cstars) product = product * c;
    return ExpectEqual(product.ToInt(), gens[0], "prod c*");
  });
  if (fd == nullptr) return;

  Check(report, "presentation_sides_equal", [&] {
    if (closed.presentation.size() + 1 != gens.size()) {
      return std::string("presentation has the wrong cardinality");
    }
    std::string d = PresentationEvaluatesEqual(closed.presentation, gens);
    if (!d.empty()) return d;
    return PresentationEvaluatesEqual(FreePresentation(*fd), gens);
  });

  Check(report, "presentation_values_vs_free_betti", [&] {
    const auto values = PresentationValues(closed.presentation, gens);
    const auto free_betti = FreeBetti(*fd);
    if (values == free_betti) return std::string();
    return Show(values) + " vs " + Show(free_betti);
  });

  Check(report, "betti_closed_vs_free", [&] {
    const auto free_betti = FreeBetti(*fd);
    if (closed.betti == free_betti) return std::string();
    return Show(closed.betti) + " vs " + Show(free_betti);
  });

  if (run_betti_oracle) {
    Check(report, "betti_closed_vs_oracle", [&] {
      const auto oracle = BettiOracle(semigroup, betti_bound);
      if (closed.betti == oracle) return std::string();
      return Show(closed.betti) + " vs oracle " + Show(oracle);
    });
  }

  Check(report, "apery_closed_vs_oracle", [&] {
    const AperySet oracle = AperyOracle(semigroup, closed.apery.anchor);
    if (closed.apery.by_residue.elements.size() !=
        static_cast<size_t>(closed.apery.anchor)) {
      return std::string("Apery cardinality differs from the anchor");
    }
    if (!(closed.apery.by_residue == oracle)) {
      return std::string("closed-form Apery set differs from the oracle");
    }
    return std::string();
  });

  Check(report, "apery_max_minus_anchor", [&] {
    return ExpectEqual(closed.apery.by_residue.Max() - closed.apery.anchor,
                       closed.frobenius, "max(Ap) - anchor");
  });

  Check(report, "free_apery_vs_closed", [&] {
    if (closed.apery.anchor != gens[0]) return std::string();
    if (FreeApery(*fd) == closed.apery.by_residue) return std::string();
    return std::string("free Apery set differs from the closed form");
  });

  Check(report, "free_frobenius", [&] {
    return ExpectEqual(FreeFrobenius(*fd), closed.frobenius, "free F");
  });
}

std::string TelescopicBothWays(const GeneratorSequence& seq, bool want_forward,
                               bool want_reverse) {
  const TelescopicResult fwd = IsTelescopic(seq);
  const TelescopicResult rev = IsTelescopic(seq.Reversed());
  if (Telescopic(fwd) != want_forward) {
    return std::string("forward telescopic = ") +
           (Telescopic(fwd) ? "true" : "false");
  }
  if (Telescopic(rev) != want_reverse) {
    return std::string("reverse telescopic = ") +
           (Telescopic(rev) ? "true" : "false");
  }
  for (const auto* r : {&fwd, &rev}) {
    if (const auto* cert = std::get_if<TelescopicCertificate>(r)) {
      if (!VerifyCertificate(*cert)) return "certificate does not verify";
    }
  }
  return "";
}

}  // namespace

bool CaseReport::Passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string CaseReport::FirstFailure() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return c.name + ": " + c.detail;
  }
  return "";
}

CaseReport VerifyTriangular(Int n, const VerifyOptions& options) {
  CaseReport report{"triangular", n, {}};
  const TriangularTriple t = TriangularTriple::Make(n);
  const GeneratorSequence seq = t.Sequence();

  Check(report, "pair_gcd", [&] {
    return ExpectEqual(TriangularPairGcd(n),
                       Gcd(t.generators[0], t.generators[1]), "pair gcd");
  });
  Check(report, "coprime", [&] {
    return ExpectEqual(GcdList(seq.entries()), 1, "gcd of triple");
  });

  Int frobenius = 0;
  Check(report, "frobenius", [&] {
    frobenius = FrobeniusTriangular(n);
    std::string d = ExpectEqual(frobenius, FrobeniusOracle(seq), "oracle");
    if (d.empty()) d = ExpectEqual(frobenius, BakerA(n), "Baker");
    if (d.empty()) {
      const ReductionTrace trace = BrauerShockleyTrace(seq);
      d = ExpectEqual(frobenius, trace.frobenius, "Brauer-Shockley");
      if (d.empty() && trace.oracle_calls != 0) d = "reduction fell back";
    }
    return d;
  });

  Check(report, "telescopic_both_directions",
        [&] { return TelescopicBothWays(seq, true, true); });

  Check(report, "embedding_dimension", [&] {
    return ExpectEqual(
        FigurateEmbeddingDimension(Family::kTriangular, n),
        NumericalSemigroup::FromGenerators(seq).embedding_dimension(),
        "embedding dimension");
  });

  if (n >= 3) {
    ClosedForms closed{TriangularCStar(n), TriangularPresentation(n),
                       TriangularBetti(n), TriangularApery(n),
                       FrobeniusTriangular(n)};
    CheckStructure(report, closed, n <= options.triangular_betti_oracle_max,
                   options.betti_bound);
  }
  return report;
}

CaseReport VerifyTetrahedral(Int n, const VerifyOptions& options) {
  CaseReport report{"tetrahedral", n, {}};
  const TetrahedralQuadruple q = TetrahedralQuadruple::Make(n);
  const GeneratorSequence seq = q.Sequence();

  Check(report, "pair_gcd", [&] {
    return ExpectEqual(TetrahedralPairGcd(n),
                       Gcd(q.generators[0], q.generators[1]), "pair gcd");
  });
  Check(report, "coprime", [&] {
    return ExpectEqual(GcdList(seq.entries()), 1, "gcd of quadruple");
  });

  Check(report, "frobenius", [&] {
    const Int f = FrobeniusTetrahedral(n);
    std::string d = ExpectEqual(f, FrobeniusOracle(seq), "oracle");
    if (d.empty()) d = ExpectEqual(f, BrauerShockleyFrobenius(seq), "Brauer-Shockley");
    return d;
  });

  if (n >= 4) {
    Check(report, "classification", [&] {
      const bool forward = q.residue_class <= 3;
      std::string d = TelescopicBothWays(seq, forward, !forward);
      if (!d.empty()) return d;
      const Direction want = forward ? Direction::kForward : Direction::kReverse;
      if (TetrahedralDirection(n) != want) return std::string("direction");
      const ReductionTrace trace =
          BrauerShockleyTrace(TetrahedralArrangement(n));
      if (trace.oracle_calls != 0) return std::string("reduction fell back");
      return std::string();
    });
  }

  Check(report, "embedding_dimension", [&] {
    return ExpectEqual(
        FigurateEmbeddingDimension(Family::kTetrahedral, n),
        NumericalSemigroup::FromGenerators(seq).embedding_dimension(),
        "embedding dimension");
  });

  if (n >= 4) {
    ClosedForms closed{TetrahedralCStar(n), TetrahedralPresentation(n),
                       TetrahedralBetti(n), TetrahedralApery(n),
                       FrobeniusTetrahedral(n)};
    CheckStructure(report, closed, n <= options.tetrahedral_betti_oracle_max,
                   options.betti_bound);
  }
  return report;
}

CaseReport VerifyChoose4(Int n) {
  CaseReport report{"choose4", n, {}};
  Check(report, "classification", [&] {
    const Choose4Report r = Choose4Family(n);
    if (r.MatchesClaim()) return std::string();
    return "observed " + std::string(ToString(r.classification())) +
           ", expected forward=" + (r.expected_forward ? "true" : "false") +
           (r.reverse_asserted
                ? std::string(" reverse=") + (r.expected_reverse ? "true" : "false")
                : std::string());
  });
  if (n >= 3) {
    Check(report, "frobenius_reduction_vs_oracle", [&] {
      const GeneratorSequence seq = Choose4Sequence(n);
      return ExpectEqual(BrauerShockleyFrobenius(seq), FrobeniusOracle(seq),
                         "Brauer-Shockley vs oracle");
    });
  }
  return report;
}

CaseReport VerifyArithmetic(Int n) {
  CaseReport report{"arith", n, {}};
  for (Int k = 2; k <= n; ++k) {
    Check(report, "k=" + std::to_string(k), [&] {
      std::vector<Int> run;
      for (Int i = 0; i < k; ++i) run.push_back(n + i);
      return ExpectEqual(BrauerArithmeticFrobenius(n, k), FrobeniusOracle(run),
                         "run formula vs oracle");
    });
  }
  return report;
}

CaseReport VerifyChoose5Permutations() {
  CaseReport report{"choose5perms", 0, {}};
  Check(report, "no_telescopic_permutation", [&] {
    const PermutationReport r = Choose5Counterexample();
    if (r.total != 720) return "expected 720 permutations, got " + std::to_string(r.total);
    return ExpectEqual(static_cast<Int>(r.telescopic_count), 0,
                       "telescopic permutations");
  });
  return report;
}

}  // namespace numsg
