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

#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "naive_oracles.h"
#include "numsg/errors.h"
#include "numsg/telescopic.h"

namespace numsg {
namespace {

std::vector<Int> Vec(const GeneratorSequence& g) { return g.vec(); }

TEST(TriplesTest, Generators) {
  EXPECT_EQ(Vec(TriangularTriple::Make(3).Sequence()),
            (std::vector<Int>{6, 10, 15}));
  EXPECT_EQ(Vec(TetrahedralQuadruple::Make(4).Sequence()),
            (std::vector<Int>{20, 35, 56, 84}));
  EXPECT_EQ(TetrahedralQuadruple::Make(10).residue_class, 4);
  EXPECT_THROW(TriangularTriple::Make(0), InvalidInputError);
}

TEST(PairGcdTest, MatchesEuclid) {
  for (Int n = 1; n <= 300; ++n) {
    EXPECT_EQ(TriangularPairGcd(n), Gcd(Triangular(n), Triangular(n + 1))) << n;
    EXPECT_EQ(TetrahedralPairGcd(n), Gcd(Tetrahedral(n), Tetrahedral(n + 1)))
        << n;
  }
}

// Values from an independent sieve.
TEST(FrobeniusTriangularTest, FrozenValues) {
  const std::vector<Int> expected = {-1,  17,  29,  89,  125,  251,
                                     323, 539, 659, 989, 1169, 1637};
  for (size_t i = 0; i < expected.size(); ++i) {
    const Int n = static_cast<Int>(i) + 1;
    EXPECT_EQ(FrobeniusTriangular(n), expected[i]) << n;
    EXPECT_EQ(BakerA(n), expected[i]) << n;
  }
}

TEST(FrobeniusTriangularTest, FormsAgreeAndMatchSieve) {
  for (Int n = 1; n <= 25; ++n) {
    const auto g = TriangularTriple::Make(n).Sequence().vec();
    EXPECT_EQ(FrobeniusTriangular(n), testing::SieveFrobenius(g)) << n;
  }
  for (Int n = 1; n <= 10000; ++n) {
    ASSERT_EQ(FrobeniusTriangularCaseForm(n), FrobeniusTriangularFloorForm(n))
        << n;
    ASSERT_EQ(BakerSignedForm(n), BakerParityForm(n)) << n;
  }
}

TEST(FrobeniusTriangularTest, OverflowIsReported) {
  EXPECT_THROW(FrobeniusTriangular(Int{1} << 40), OverflowError);
  EXPECT_THROW(FrobeniusTetrahedral(Int{1} << 40), OverflowError);
}

TEST(FrobeniusTetrahedralTest, FrozenValues) {
  const std::vector<Int> expected = {-1,   41,   249,  253, 853,
                                     1243, 1571, 2619, 5059};
  for (size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(FrobeniusTetrahedral(static_cast<Int>(i) + 1), expected[i]);
  }
}

TEST(FrobeniusTetrahedralTest, MatchesSieve) {
  for (Int n = 1; n <= 14; ++n) {
    const auto g = TetrahedralQuadruple::Make(n).Sequence().vec();
    EXPECT_EQ(FrobeniusTetrahedral(n), testing::SieveFrobenius(g)) << n;
  }
}

TEST(BrauerArithmeticTest, Values) {
  EXPECT_EQ(BrauerArithmeticFrobenius(6, 2), 29);
  EXPECT_EQ(BrauerArithmeticFrobenius(6, 3), 17);
  EXPECT_EQ(BrauerArithmeticFrobenius(6, 4), 11);
  EXPECT_EQ(BrauerArithmeticFrobenius(6, 5), 11);
  EXPECT_EQ(BrauerArithmeticFrobenius(6, 6), 5);
  EXPECT_THROW(BrauerArithmeticFrobenius(6, 7), InvalidInputError);
  EXPECT_THROW(BrauerArithmeticFrobenius(6, 1), InvalidInputError);
  for (Int n = 2; n <= 15; ++n) {
    for (Int k = 2; k <= n; ++k) {
      std::vector<Int> run;
      for (Int i = 0; i < k; ++i) run.push_back(n + i);
      EXPECT_EQ(BrauerArithmeticFrobenius(n, k), testing::SieveFrobenius(run));
    }
  }
}

TEST(DirectionTest, ModSixPattern) {
  for (Int n = 4; n <= 60; ++n) {
    const bool reverse = n % 6 == 4 || n % 6 == 5;
    EXPECT_EQ(TetrahedralDirection(n),
              reverse ? Direction::kReverse : Direction::kForward);
    EXPECT_EQ(TriangularDirection(n), Direction::kForward);
  }
  EXPECT_EQ(ToString(Direction::kReverse), "reverse");
  EXPECT_EQ(Vec(TetrahedralArrangement(4)), (std::vector<Int>{84, 56, 35, 20}));
}

TEST(CStarTest, FrozenTetrahedral) {
  EXPECT_EQ(TetrahedralCStar(4).cstars, (std::vector<Int>{3, 4, 7}));
  EXPECT_EQ(TetrahedralCStar(5).cstars, (std::vector<Int>{10, 3, 4}));
  EXPECT_EQ(TetrahedralCStar(6).cstars, (std::vector<Int>{2, 7, 4}));
  EXPECT_EQ(TetrahedralCStar(7).cstars, (std::vector<Int>{7, 4, 3}));
  EXPECT_EQ(TetrahedralCStar(8).cstars, (std::vector<Int>{8, 3, 5}));
  EXPECT_EQ(TriangularCStar(3).cstars, (std::vector<Int>{3, 2}));
  EXPECT_EQ(TriangularCStar(4).cstars, (std::vector<Int>{2, 5}));
}

TEST(CStarTest, ClosedFormsMatchSearch) {
  for (Int n = 3; n <= 40; ++n) {
    const ClosedFormCStar c = TriangularCStar(n);
    EXPECT_EQ(c.cstars, ComputeCStar(c.arrangement).cstars) << n;
  }
  for (Int n = 4; n <= 30; ++n) {
    const ClosedFormCStar c = TetrahedralCStar(n);
    EXPECT_EQ(c.cstars, ComputeCStar(c.arrangement).cstars) << n;
  }
}

TEST(ReducedEmbeddingTest, StructuralOpsRefuse) {
  EXPECT_THROW(TriangularCStar(2), ReducedEmbeddingError);
  EXPECT_THROW(TriangularPresentation(1), ReducedEmbeddingError);
  EXPECT_THROW(TriangularBetti(2), ReducedEmbeddingError);
  EXPECT_THROW(TriangularApery(2), ReducedEmbeddingError);
  EXPECT_THROW(TetrahedralCStar(3), ReducedEmbeddingError);
  EXPECT_THROW(TetrahedralPresentation(2), ReducedEmbeddingError);
  EXPECT_THROW(TetrahedralBetti(3), ReducedEmbeddingError);
  EXPECT_THROW(TetrahedralApery(1), ReducedEmbeddingError);
  EXPECT_NO_THROW(FrobeniusTetrahedral(3));
}

TEST(BettiTest, FrozenSets) {
  EXPECT_EQ(TriangularBetti(3), (std::set<Int>{30}));
  EXPECT_EQ(TriangularBetti(4), (std::set<Int>{30, 105}));
  EXPECT_EQ(TriangularBetti(5), (std::set<Int>{84, 105}));
  EXPECT_EQ(TriangularBetti(6), (std::set<Int>{84, 252}));
  EXPECT_EQ(TriangularBetti(7), (std::set<Int>{180, 252}));
  EXPECT_EQ(TetrahedralBetti(4), (std::set<Int>{140, 168}));
  EXPECT_EQ(TetrahedralBetti(5), (std::set<Int>{140, 168, 840}));
  EXPECT_EQ(TetrahedralBetti(6), (std::set<Int>{168, 660, 840}));
}

TEST(PresentationTest, SidesBalanceAndHitBetti) {
  for (Int n = 3; n <= 40; ++n) {
    const auto gens = TriangularArrangement(n).vec();
    std::set<Int> values;
    for (const Relation& r : TriangularPresentation(n)) {
      EXPECT_EQ(Evaluate(r.lhs, gens), Evaluate(r.rhs, gens)) << n;
      values.insert(Evaluate(r.lhs, gens));
    }
    EXPECT_EQ(values, TriangularBetti(n)) << n;
  }
  for (Int n = 4; n <= 30; ++n) {
    const auto gens = TetrahedralArrangement(n).vec();
    std::set<Int> values;
    for (const Relation& r : TetrahedralPresentation(n)) {
      EXPECT_EQ(Evaluate(r.lhs, gens), Evaluate(r.rhs, gens)) << n;
      values.insert(Evaluate(r.lhs, gens));
    }
    EXPECT_EQ(values, TetrahedralBetti(n)) << n;
  }
}

TEST(AperyTest, MatchesSweep) {
  for (Int n = 3; n <= 12; ++n) {
    const ClosedFormApery ap = TriangularApery(n);
    const auto gens = TriangularTriple::Make(n).Sequence().vec();
    EXPECT_EQ(ap.by_residue.elements, testing::SweepApery(gens, ap.anchor)) << n;
  }
  for (Int n = 4; n <= 11; ++n) {
    const ClosedFormApery ap = TetrahedralApery(n);
    const auto gens = TetrahedralQuadruple::Make(n).Sequence().vec();
    EXPECT_EQ(ap.by_residue.elements, testing::SweepApery(gens, ap.anchor)) << n;
    EXPECT_EQ(ap.by_residue.Max() - ap.anchor, FrobeniusTetrahedral(n)) << n;
  }
  EXPECT_EQ(TetrahedralApery(4).anchor, 84);
  EXPECT_EQ(TetrahedralApery(6).anchor, 56);
}

TEST(Choose4Test, ClassificationPattern) {
  for (Int n = 1; n <= 40; ++n) {
    const Choose4Report r = Choose4Family(n);
    EXPECT_TRUE(r.MatchesClaim()) << n << " " << ToString(r.classification());
  }
  EXPECT_EQ(Choose4Family(3).classification(), Choose4Class::kBoth);
  EXPECT_EQ(Choose4Family(12).classification(), Choose4Class::kForward);
  EXPECT_EQ(Choose4Family(15).classification(), Choose4Class::kReverse);
  EXPECT_EQ(Choose4Family(1).classification(), Choose4Class::kForward);
  EXPECT_FALSE(Choose4Family(1).reverse_asserted);
}

TEST(Choose4Test, FrozenFrobenius) {
  const std::vector<Int> expected = {559, 2449, 2909, 4199};
  for (Int n = 3; n <= 6; ++n) {
    EXPECT_EQ(BrauerShockleyFrobenius(Choose4Sequence(n)),
              expected[static_cast<size_t>(n - 3)]);
  }
}

TEST(PermutationTest, ChooseFiveHasNoTelescopicOrdering) {
  EXPECT_EQ(Vec(Choose5Sequence()),
            (std::vector<Int>{792, 1287, 2002, 3003, 4368, 6188}));
  const PermutationReport r = Choose5Counterexample();
  EXPECT_EQ(r.total, 720u);
  EXPECT_EQ(r.telescopic_count, 0u);
  EXPECT_EQ(r.outcomes.size(), 720u);
}

TEST(PermutationTest, SmallSet) {
  const PermutationReport r = TelescopicPermutations(GeneratorSequence{6, 10, 15});
  EXPECT_EQ(r.total, 6u);
  EXPECT_EQ(r.telescopic_count, 6u);
  EXPECT_THROW(TelescopicPermutations(GeneratorSequence{1, 2, 3, 4, 5, 6, 7, 8, 9}),
               InvalidInputError);
}

TEST(EmbeddingDimensionTest, Values) {
  EXPECT_EQ(FigurateEmbeddingDimension(Family::kTriangular, 1), 1);
  EXPECT_EQ(FigurateEmbeddingDimension(Family::kTriangular, 2), 2);
  EXPECT_EQ(FigurateEmbeddingDimension(Family::kTriangular, 9), 3);
  EXPECT_EQ(FigurateEmbeddingDimension(Family::kTetrahedral, 1), 1);
  EXPECT_EQ(FigurateEmbeddingDimension(Family::kTetrahedral, 2), 3);
  EXPECT_EQ(FigurateEmbeddingDimension(Family::kTetrahedral, 3), 3);
  EXPECT_EQ(FigurateEmbeddingDimension(Family::kTetrahedral, 4), 4);
}

}  // namespace
}  // namespace numsg
