// Copyright 2026 The Authors.
//
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


#include "cyclicmat/counterexample.h"

#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclicmat/transversal.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace cyclicmat {
namespace {

using testing::NaiveWindow;

const std::vector<std::pair<int, int>> kCases = {{8, 4}, {10, 4}, {12, 4}, {12, 5}, {16, 6}};

TEST(TwoBlockTest, WorkedExamples) {
  TwoBlockSet b = MakeTwoBlockSet({12, 5, 1, 2, 2});
  EXPECT_EQ(b.set, SubsetMask::OfOneBased({1, 2, 4, 5}));
  EXPECT_EQ(b.gap, SubsetMask::OfOneBased({3}));
  b = MakeTwoBlockSet({12, 5, 1, 3, 2});
  EXPECT_EQ(b.set, SubsetMask::OfOneBased({1, 2, 3, 6, 7}));
  EXPECT_EQ(b.gap, SubsetMask::OfOneBased({4, 5}));
  b = MakeTwoBlockSet({8, 4, 1, 2, 2});
  EXPECT_EQ(b.set, SubsetMask::OfOneBased({1, 2, 5, 6}));
  EXPECT_EQ(b.gap, SubsetMask::OfOneBased({3, 4}));
  // k = s - 1 forbids the first gap element.
  b = MakeTwoBlockSet({12, 5, 1, 4, 2});
  EXPECT_EQ(b.allowed, SubsetMask::OfOneBased({6, 7}));
}

TEST(TwoBlockTest, BlockSizesAndGap) {
  for (const auto& [n, s] : kCases) {
    for (const TwoBlockSpec& spec : AllTwoBlockSpecs(n, s)) {
      const TwoBlockSet b = MakeTwoBlockSet(spec);
      EXPECT_EQ(b.set.size(), spec.k + spec.l) << spec.ToString();
      EXPECT_EQ(b.gap.size(), spec.k + spec.l - s + 2) << spec.ToString();
      EXPECT_FALSE(b.set.Intersects(b.gap));
      EXPECT_TRUE(b.allowed.IsSubsetOf(b.gap));
      // The two blocks and the gap form one window.
      EXPECT_EQ(b.set | b.gap, NaiveWindow(n, spec.i, spec.i + 2 * spec.k + 2 * spec.l - s + 1));
    }
  }
}

TEST(TwoBlockTest, RejectsInvalidParameters) {
  EXPECT_THROW(RequireCounterexampleParameters(10, 5), std::invalid_argument);
  EXPECT_THROW(RequireCounterexampleParameters(12, 3), std::invalid_argument);
  EXPECT_THROW(RequireCounterexampleParameters(13, 4), std::invalid_argument);
  EXPECT_THROW(MakeTwoBlockSet({12, 5, 2, 2, 2}), std::invalid_argument);
  EXPECT_THROW(MakeTwoBlockSet({12, 5, 1, 4, 4}), std::invalid_argument);
  EXPECT_THROW(MakeTwoBlockSet({12, 5, 1, 1, 3}), std::invalid_argument);
}

TEST(TwoBlockTest, AugmentedSetsAreFreeCyclicCircuits) {
  for (const auto& [n, s] : kCases) {
    const Matroid psi = FreeCyclic(n, s);
    long checked = 0;
    for (const TwoBlockSpec& spec : AllTwoBlockSpecs(n, s)) {
      const TwoBlockSet b = MakeTwoBlockSet(spec);
      b.allowed.ForEach([&](int e) {
        const SubsetMask c = b.set.With(e);
        // Dependent, and independent after removing any one element.
        bool minimal = !psi.IsIndependent(c);
        c.ForEach([&](int f) { minimal = minimal && psi.IsIndependent(c.Without(f)); });
        EXPECT_TRUE(minimal) << spec.ToString() << " x=e" << e + 1;
        ++checked;
      });
    }
    const VerificationReport report = CheckTwoBlockCircuits(n, s);
    EXPECT_TRUE(report.ok);
    EXPECT_EQ(report.checked, checked);
  }
}

TEST(LedgerTest, EveryStepIsAValidElimination) {
  for (const auto& [n, s] : kCases) {
    const ForcedCircuitLedger ledger = DeriveForcedCircuits(n, s);
    const Matroid psi = FreeCyclic(n, s);
    const auto& entries = ledger.entries();
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const ForcedCircuit& entry = entries[k];
      EXPECT_FALSE(psi.IsIndependent(entry.set));
      EXPECT_TRUE(entry.psi_circuit);
      if (entry.rule == DerivationRule::kOddWindow) {
        EXPECT_EQ(entry.set.size(), s);
        continue;
      }
      const int e = entry.eliminated - 1;
      EXPECT_NE(entry.parent1, entry.parent2);
      EXPECT_TRUE(entry.parent1.contains(e) && entry.parent2.contains(e));
      EXPECT_TRUE(((entry.parent1 | entry.parent2).Without(e)).IsSubsetOf(entry.set));
      // Parents were derived strictly earlier.
      const ForcedCircuit* p1 = ledger.Find(entry.parent1);
      const ForcedCircuit* p2 = ledger.Find(entry.parent2);
      ASSERT_NE(p1, nullptr);
      ASSERT_NE(p2, nullptr);
      EXPECT_LT(p1, &entries[k]);
      EXPECT_LT(p2, &entries[k]);
    }
    for (const TwoBlockSpec& spec : AllTwoBlockSpecs(n, s)) {
      const TwoBlockSet b = MakeTwoBlockSet(spec);
      b.allowed.ForEach([&](int e) {
        EXPECT_TRUE(ledger.Contains(b.set.With(e))) << spec.ToString() << " x=e" << e + 1;
      });
    }
  }
}

TEST(LedgerTest, KnownDerivations) {
  const ForcedCircuitLedger ledger = DeriveForcedCircuits(12, 5);
  // The same set also arises from a (3,3) spec, so look the entry up by spec.
  const ForcedCircuit* entry = nullptr;
  for (const ForcedCircuit& e : ledger.entries()) {
    if (e.spec.i == 1 && e.spec.k == 4 && e.spec.l == 2 && e.x == 7) entry = &e;
  }
  ASSERT_NE(entry, nullptr);
  EXPECT_EQ(entry->rule, DerivationRule::kLongFirstBlock);
  EXPECT_EQ(entry->set, MakeTwoBlockSet({12, 5, 1, 4, 2}).set.With(6));
  EXPECT_NE(ledger.Find(entry->set), nullptr);
  // k + l = s: elimination between two odd windows two apart.
  const ForcedCircuit* adjacent = ledger.Find(MakeTwoBlockSet({12, 5, 1, 3, 2}).set.With(3));
  ASSERT_NE(adjacent, nullptr);
  EXPECT_EQ(adjacent->rule, DerivationRule::kAdjacentWindows);
  EXPECT_EQ(adjacent->parent1 | adjacent->parent2, NaiveWindow(12, 1, 7));
  // Base case: the odd window itself.
  const ForcedCircuit* base = ledger.Find(MakeTwoBlockSet({12, 5, 3, 2, 2}).set.With(4));
  ASSERT_NE(base, nullptr);
  EXPECT_EQ(base->rule, DerivationRule::kOddWindow);
  EXPECT_STREQ(DerivationRuleName(DerivationRule::kMirrored), "mirrored");
}

TEST(RankBoundTest, ChainIsInternallyConsistent) {
  for (const auto& [n, s] : kCases) {
    const ForcedCircuitLedger ledger = DeriveForcedCircuits(n, s);
    const RankBoundCertificate cert = CertifyRankBound(ledger);
    ASSERT_FALSE(cert.chain.empty());
    EXPECT_EQ(cert.chain.front().set, NaiveWindow(n, 1, s));
    EXPECT_EQ(cert.chain.front().bound, s - 1);
    for (std::size_t k = 1; k < cert.chain.size(); ++k) {
      const RankStep& prev = cert.chain[k - 1];
      const RankStep& step = cert.chain[k];
      EXPECT_EQ(step.set, prev.set.With(step.added - 1));
      if (step.witness.empty()) {
        EXPECT_EQ(step.bound, prev.bound + 1);
      } else {
        EXPECT_EQ(step.bound, prev.bound);
        EXPECT_TRUE(ledger.Contains(step.witness));
        EXPECT_TRUE(step.witness.contains(step.added - 1));
        EXPECT_TRUE(step.witness.Without(step.added - 1).IsSubsetOf(prev.set));
      }
    }
    const SubsetMask top = NaiveWindow(n, 1, n - s + 2);
    EXPECT_EQ(cert.chain.back().set, top);
    SubsetMask spanned = top;
    for (const RankStep& step : cert.spanning) {
      EXPECT_TRUE(ledger.Contains(step.witness));
      EXPECT_TRUE(step.witness.Without(step.added - 1).IsSubsetOf(top));
      spanned = spanned.With(step.added - 1);
    }
    EXPECT_EQ(spanned, SubsetMask::Full(n));
    EXPECT_EQ(cert.rank_bound, n / 2);
    EXPECT_EQ(cert.assumed_rank, n / 2 + 1);
    EXPECT_TRUE(cert.verified);
    EXPECT_TRUE(cert.contradiction());
    // The free-cyclic matroid satisfies every forced dependency, so its rank
    // respects the same bound.
    EXPECT_LE(FreeCyclic(n, s).Rank(), cert.rank_bound);
  }
}

TEST(RankBoundTest, CertificateTextEndsInTheContradiction) {
  const RankBoundCertificate cert = CertifyRankBound(DeriveForcedCircuits(12, 5));
  ASSERT_FALSE(cert.Lines().empty());
  EXPECT_EQ(cert.Lines().back(), "6 < 7 = r(M'): contradiction");
  const RankBoundCertificate small = CertifyRankBound(DeriveForcedCircuits(8, 4));
  EXPECT_EQ(small.Lines().back(), "4 < 5 = r(M'): contradiction");
}

}  // namespace
}  // namespace cyclicmat
