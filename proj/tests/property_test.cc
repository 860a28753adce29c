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

// Randomized property suites. Every generator is seeded so failures
// reproduce; the seed and the offending input are printed on failure.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "naive_oracles.h"
#include "numsg/arith.h"
#include "numsg/errors.h"
#include "numsg/figurate.h"
#include "numsg/semigroup.h"
#include "numsg/telescopic.h"

namespace numsg {
namespace {

constexpr std::uint64_t kSeed = 20260415;

std::string Show(const std::vector<Int>& g) {
  std::string s;
  for (Int x : g) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

NumericalSemigroup S(const std::vector<Int>& g) {
  return NumericalSemigroup::FromGenerators(GeneratorSequence(g));
}

TEST(ArithProperty, FigurateDifferences) {
  for (Int n = 1; n <= 2000; ++n) {
    ASSERT_EQ(Triangular(n + 1) - Triangular(n), n + 1);
    ASSERT_EQ(Tetrahedral(n + 1) - Tetrahedral(n), Triangular(n + 1));
  }
}

TEST(ArithProperty, GcdListInvariantUnderPermutationAndDuplicates) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<Int> len(1, 8), val(1, 10000);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Int> xs(static_cast<size_t>(len(rng)));
    for (Int& x : xs) x = val(rng) * (trial % 3 == 0 ? 6 : 1);
    const Int d = GcdList(xs);
    std::shuffle(xs.begin(), xs.end(), rng);
    ASSERT_EQ(GcdList(xs), d);
    xs.push_back(xs.front());
    ASSERT_EQ(GcdList(xs), d);
    for (Int x : xs) ASSERT_EQ(x % d, 0);
  }
}

TEST(ArithProperty, DifferenceGcdLemma) {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<Int> len(2, 8), val(1, 10000);
  int coprime_differences = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Int> xs;
    const Int size = len(rng);
    while (static_cast<Int>(xs.size()) < size) {
      const Int x = val(rng);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<Int> diffs;
    for (size_t i = 1; i < xs.size(); ++i) diffs.push_back(xs[i] - xs[i - 1]);
    const Int d1 = GcdList(xs);
    const Int d2 = GcdList(diffs);
    ASSERT_EQ(d2 % d1, 0) << Show(xs);
    if (d2 == 1) {
      ++coprime_differences;
      ASSERT_EQ(d1, 1) << Show(xs);
    }
  }
  EXPECT_GT(coprime_differences, 100);
}

TEST(ArithProperty, OverflowNeverWraps) {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<Int> big(Int{1} << 32, Int{1} << 40);
  for (int trial = 0; trial < 200; ++trial) {
    const Int a = big(rng), b = big(rng);
    EXPECT_THROW(CheckedMul(a, b), OverflowError);
    const Wide exact = Wide(a) * b;
    EXPECT_THROW(exact.ToInt(), OverflowError);
  }
  // Crafted coprime pair whose Sylvester product leaves 64 bits.
  try {
    BrauerShockleyFrobenius(GeneratorSequence{4294967311, 4294967357});
    FAIL() << "expected an overflow error";
  } catch (const OverflowError&) {
  }
}

TEST(SemigroupProperty, SylvesterPairs) {
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_int_distribution<Int> val(2, 200);
  int tested = 0;
  while (tested < 100) {
    Int a = val(rng), b = val(rng);
    if (a == b || std::gcd(a, b) != 1) continue;
    if (a > b) std::swap(a, b);
    const std::vector<Int> g{a, b};
    ASSERT_EQ(FrobeniusOracle(g), a * b - a - b) << a << "," << b;
    ASSERT_EQ(BrauerShockleyFrobenius(GeneratorSequence(g)), a * b - a - b);
    ++tested;
  }
}

TEST(SemigroupProperty, AperyAndFrobeniusConsistency) {
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_int_distribution<size_t> size(2, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = testing::RandomCoprime(rng, size(rng), 2, trial < 20 ? 5000 : 300);
    const auto s = S(g);
    const Int m = s.multiplicity();
    const AperySet ap = AperyOracle(s, m);
    ASSERT_EQ(static_cast<Int>(ap.elements.size()), m) << Show(g);
    ASSERT_EQ(ap.elements[0], 0);
    for (Int e : ap.elements) {
      ASSERT_TRUE(s.Contains(e)) << Show(g) << " " << e;
      ASSERT_FALSE(s.Contains(e - m)) << Show(g) << " " << e;
    }
    const Int f = FrobeniusOracle(g);
    ASSERT_EQ(f, ap.Max() - m);
    ASSERT_FALSE(s.Contains(f));
    for (Int x = f + 1; x <= f + m; ++x) ASSERT_TRUE(s.Contains(x)) << Show(g);
    if (m <= 300) ASSERT_EQ(f, testing::SieveFrobenius(g)) << Show(g);
  }
}

TEST(SemigroupProperty, FactorizationSoundness) {
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_int_distribution<size_t> size(2, 4);
  std::uniform_int_distribution<Int> target(0, 500);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing::RandomCoprime(rng, size(rng), 4, 60);
    std::sort(g.begin(), g.end());
    const FactorizationEnumerator e(g);
    for (int q = 0; q < 10; ++q) {
      const Int x = target(rng);
      const auto fast = e.All(x);
      for (const auto& u : fast) ASSERT_EQ(Evaluate(u, g), x);
      ASSERT_EQ(fast, testing::NaiveFactorizations(g, x)) << Show(g) << " " << x;
    }
  }
}

// Within a class, vectors connect through shared-support chains; across
// classes, no two vectors share support.
TEST(SemigroupProperty, RsPartitionValidity) {
  std::mt19937_64 rng(kSeed + 6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::RandomCoprime(rng, 3, 4, 40);
    const auto s = S(g);
    for (Int x = 0; x <= 200; x += 7) {
      if (!s.Contains(x)) continue;
      const RsPartition p = RsClasses(s, x);
      const auto all = Factorizations(s, x);
      size_t total = 0;
      std::set<Factorization> seen;
      for (const auto& cls : p.classes) {
        ASSERT_FALSE(cls.empty());
        total += cls.size();
        for (const auto& u : cls) ASSERT_TRUE(seen.insert(u).second);
      }
      ASSERT_EQ(total, all.size());
      auto shares = [](const Factorization& a, const Factorization& b) {
        for (size_t i = 0; i < a.size(); ++i) {
          if (a[i] > 0 && b[i] > 0) return true;
        }
        return false;
      };
      for (size_t c = 0; c < p.classes.size(); ++c) {
        for (size_t d = c + 1; d < p.classes.size(); ++d) {
          for (const auto& u : p.classes[c]) {
            for (const auto& v : p.classes[d]) ASSERT_FALSE(shares(u, v));
          }
        }
        // Connectivity by breadth-first search inside the class.
        const auto& cls = p.classes[c];
        std::vector<bool> reached(cls.size(), false);
        std::vector<size_t> frontier{0};
        reached[0] = true;
        while (!frontier.empty()) {
          const size_t i = frontier.back();
          frontier.pop_back();
          for (size_t j = 0; j < cls.size(); ++j) {
            if (!reached[j] && shares(cls[i], cls[j])) {
              reached[j] = true;
              frontier.push_back(j);
            }
          }
        }
        ASSERT_TRUE(std::all_of(reached.begin(), reached.end(),
                                [](bool b) { return b; }));
      }
    }
  }
}

TEST(SemigroupProperty, BettiMatchesPresentationEvaluations) {
  std::mt19937_64 rng(kSeed + 7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::RandomCoprime(rng, 3, 3, 30);
    const auto s = S(g);
    std::set<Int> values;
    for (const Relation& r : MinimalPresentationOracle(s)) {
      ASSERT_EQ(Evaluate(r.lhs, s.generators()), Evaluate(r.rhs, s.generators()));
      values.insert(Evaluate(r.lhs, s.generators()));
    }
    ASSERT_EQ(values, BettiOracle(s)) << Show(g);
  }
}

TEST(SemigroupProperty, ConcurrentCacheReaders) {
  const auto s = S({20, 35, 56, 84});
  std::vector<Int> seen(8, 0);
  std::vector<std::thread> pool;
  for (size_t i = 0; i < seen.size(); ++i) {
    pool.emplace_back([&, i] { seen[i] = s.Frobenius(); });
  }
  for (auto& t : pool) t.join();
  for (Int f : seen) EXPECT_EQ(f, 253);
}

TEST(TelescopicProperty, BrauerShockleyMatchesOracle) {
  std::mt19937_64 rng(kSeed + 8);
  std::uniform_int_distribution<size_t> size(2, 5);
  std::uniform_int_distribution<Int> scale(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    // Half the cases are built with a shared factor so reductions fire.
    auto g = testing::RandomCoprime(rng, size(rng), 2, 500);
    if (trial % 2 == 0 && g.size() >= 3) {
      const Int d = scale(rng) + 1;
      for (size_t i = 0; i + 1 < g.size(); ++i) g[i] = std::min<Int>(g[i] * d, 500);
      if (testing::Gcd(g) != 1) continue;
      std::sort(g.begin(), g.end());
      if (std::adjacent_find(g.begin(), g.end()) != g.end()) continue;
    }
    ASSERT_EQ(BrauerShockleyFrobenius(GeneratorSequence(g)), FrobeniusOracle(g))
        << Show(g);
  }
}

TEST(TelescopicProperty, CertificatesAndPrefixClosure) {
  std::vector<GeneratorSequence> family;
  for (Int n = 1; n <= 60; ++n) {
    family.push_back(TriangularTriple::Make(n).Sequence());
    if (n >= 4) family.push_back(TetrahedralArrangement(n));
  }
  for (Int n = 1; n <= 30; ++n) {
    const Choose4Report r = Choose4Family(n);
    if (r.forward) family.push_back(r.sequence);
    if (r.reverse) family.push_back(r.sequence.Reversed());
  }
  for (const GeneratorSequence& seq : family) {
    const TelescopicResult r = IsTelescopic(seq);
    ASSERT_TRUE(Telescopic(r)) << Show(seq.vec());
    ASSERT_TRUE(VerifyCertificate(std::get<TelescopicCertificate>(r)));
    const auto d = DivideChain(seq);
    for (size_t i = 2; i < seq.size(); ++i) {
      std::vector<Int> prefix;
      for (size_t j = 0; j < i; ++j) prefix.push_back(seq[j] / d[i - 1]);
      if (std::set<Int>(prefix.begin(), prefix.end()).size() != prefix.size()) {
        continue;
      }
      ASSERT_TRUE(Telescopic(IsTelescopic(GeneratorSequence(prefix))))
          << Show(seq.vec()) << " prefix " << i;
    }
  }
}

TEST(TelescopicProperty, FreeDecompositionsAgreeWithOracles) {
  std::mt19937_64 rng(kSeed + 9);
  int free_count = 0;
  for (int trial = 0; trial < 400 && free_count < 60; ++trial) {
    // Build telescopic triples a = (p q, p r, s) with gcd(q, r) = 1.
    std::uniform_int_distribution<Int> small(2, 9);
    const Int p = small(rng), q = small(rng), r = small(rng);
    if (q == r || std::gcd(q, r) != 1) continue;
    std::uniform_int_distribution<Int> last(2, 60);
    const Int s3 = last(rng);
    std::vector<Int> g{p * q, p * r, s3};
    if (testing::Gcd(g) != 1) continue;
    const auto sg = S(g);
    if (sg.embedding_dimension() != 3) continue;
    const FreenessResult f = IsFree(GeneratorSequence(g));
    const TelescopicResult t = IsTelescopic(GeneratorSequence(g));
    ASSERT_EQ(std::holds_alternative<FreeDecomposition>(f), Telescopic(t))
        << Show(g);
    if (!Telescopic(t)) continue;
    ++free_count;
    const auto& fd = std::get<FreeDecomposition>(f);
    ASSERT_EQ(FreeFrobenius(fd), FrobeniusOracle(g)) << Show(g);
    ASSERT_EQ(FreeApery(fd), AperyOracle(sg, g[0])) << Show(g);
    ASSERT_EQ(FreeBetti(fd), BettiOracle(sg)) << Show(g);
    const Presentation pres = FreePresentation(fd);
    ASSERT_EQ(pres.size(), g.size() - 1);
    std::set<Int> values;
    for (const Relation& rel : pres) {
      ASSERT_EQ(Evaluate(rel.lhs, g), Evaluate(rel.rhs, g));
      values.insert(Evaluate(rel.lhs, g));
    }
    ASSERT_EQ(values, BettiOracle(sg)) << Show(g);
  }
  EXPECT_GE(free_count, 30);
}

}  // namespace
}  // namespace numsg
