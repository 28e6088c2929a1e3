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


#include "cyclicmat/cyclic.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cyclicmat/constructions.h"
#include "cyclicmat/transversal.h"
#include "cyclicmat/weakmap.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace cyclicmat {
namespace {

using testing::Rng;

// Window of `length` positions from one-based position i of `order`.
SubsetMask OrderWindow(const std::vector<int>& order, int i, int length) {
  const int n = static_cast<int>(order.size());
  SubsetMask out;
  for (int k = 0; k < length; ++k) out = out.With(order[((i - 1 + k) % n + n) % n]);
  return out;
}

bool ContainsSuperset(const std::vector<SubsetMask>& family, SubsetMask w, int size) {
  return std::any_of(family.begin(), family.end(),
                     [&](SubsetMask c) { return c.size() == size && w.IsSubsetOf(c); });
}

bool Member(const std::vector<SubsetMask>& family, SubsetMask x) {
  return std::find(family.begin(), family.end(), x) != family.end();
}

// The definitions, evaluated literally on exhaustively enumerated families.
struct NaiveVerdict {
  bool nearly = true;
  bool full = true;
};

NaiveVerdict NaiveCertify(const Matroid& m, const std::vector<int>& order, int s, int t) {
  const auto indep = [&](SubsetMask x) { return m.IsIndependent(x); };
  const auto circuits = testing::NaiveCircuits(indep, m.size());
  const auto cocircuits = testing::NaiveCocircuits(indep, m.size());
  const int n = m.size();
  NaiveVerdict v;
  for (int i = 1; i <= n; ++i) {
    v.nearly = v.nearly && ContainsSuperset(circuits, OrderWindow(order, i, s - 1), s) &&
               ContainsSuperset(cocircuits, OrderWindow(order, i, t - 1), t);
  }
  auto circuit_at = [&](int i) {
    const SubsetMask w = OrderWindow(order, i, s);
    return w.size() == s && Member(circuits, w);
  };
  auto cocircuit_at = [&](int i) {
    const SubsetMask w = OrderWindow(order, i, t);
    return w.size() == t && Member(cocircuits, w);
  };
  v.full = (circuit_at(1) || circuit_at(2)) && (cocircuit_at(1) || cocircuit_at(2));
  for (int i = 1; i <= n; ++i) {
    if (circuit_at(i) && !circuit_at(i + 2)) v.full = false;
    if (cocircuit_at(i) && !cocircuit_at(i + 2)) v.full = false;
  }
  v.full = v.full && v.nearly;
  return v;
}

std::vector<Matroid> Fixtures() {
  return {FreeCyclic(6, 3), FreeCyclic(8, 3), FreeCyclic(8, 4), Wheel(3), Wheel(4), Whirl(3),
          FreeSpike(3),     FreeSpike(4),     Uniform(2, 4),    Uniform(2, 5),
          Uniform(3, 6),    TruncatedFreeCyclic(8, 3, 5)};
}

TEST(CyclicOrderingTest, WindowsRotationAndReflection) {
  const CyclicOrdering sigma = CyclicOrdering::FromOneBased({3, 1, 4, 2, 5});
  EXPECT_EQ(sigma.at(1), 2);
  EXPECT_EQ(sigma.at(6), 2);
  EXPECT_EQ(sigma.Window(4, 1), SubsetMask::OfOneBased({2, 5, 3}));
  EXPECT_EQ(sigma.WindowOfLength(5, 2), SubsetMask::OfOneBased({5, 3}));
  EXPECT_EQ(sigma.WindowOfLength(2, 9), SubsetMask::Full(5));
  EXPECT_TRUE(sigma.WindowOfLength(2, 0).empty());
  EXPECT_EQ(sigma.Rotated(1).OneBased(), (std::vector<int>{1, 4, 2, 5, 3}));
  EXPECT_EQ(sigma.Reversed().OneBased(), (std::vector<int>{5, 2, 4, 1, 3}));
  EXPECT_THROW(CyclicOrdering::FromOneBased({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(CyclicOrdering({0, 2}), std::invalid_argument);
}

TEST(CyclicOrderingTest, CanonicalFormIsInvariantUnderTheDihedralGroup) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.Between(1, 10);
    const CyclicOrdering sigma(rng.Permutation(n));
    const CyclicOrdering c = sigma.Canonical();
    EXPECT_EQ(sigma.Rotated(rng.Below(n)).Canonical(), c);
    EXPECT_EQ(sigma.Reversed().Rotated(rng.Below(n)).Canonical(), c);
    EXPECT_EQ(c.at(1), 0);
    EXPECT_TRUE(sigma.EquivalentTo(c));
  }
}

TEST(CertifyTest, AgreesWithTheDefinitionsOnRandomOrderings) {
  Rng rng(32);
  for (const Matroid& m : Fixtures()) {
    for (int trial = 0; trial < 12; ++trial) {
      const std::vector<int> order = trial == 0 ? CyclicOrdering::Natural(m.size()).order()
                                                : rng.Permutation(m.size());
      const int s = rng.Between(2, 4);
      const int t = rng.Between(2, 4);
      const OrderingCertificate cert = Certify(m, CyclicOrdering(order), STParams(s, t));
      const NaiveVerdict naive = NaiveCertify(m, order, s, t);
      EXPECT_EQ(cert.nearly, naive.nearly) << m.name() << " s=" << s << " t=" << t;
      EXPECT_EQ(cert.full, naive.full) << m.name() << " s=" << s << " t=" << t;
    }
  }
}

TEST(CertifyTest, KnownOrderings) {
  EXPECT_EQ(Certify(FreeCyclic(8, 3), CyclicOrdering::Natural(8), STParams(3, 3)).kind,
            OrderingKind::kFull);
  EXPECT_TRUE(IsNearlyCyclic(FreeSpike(4), CyclicOrdering::Natural(8), STParams(4, 4)));
  // Every ordering of U(2,5) is (3,4)-cyclic.
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_TRUE(IsFullyCyclic(Uniform(2, 5), CyclicOrdering(rng.Permutation(5)), STParams(3, 4)));
  }
  // Spokes first, then rims: consecutive spokes lie in no triangle.
  const CyclicOrdering grouped = CyclicOrdering::FromOneBased({1, 3, 5, 7, 2, 4, 6, 8});
  const OrderingCertificate cert = Certify(Wheel(4), grouped, STParams(3, 3));
  EXPECT_EQ(cert.kind, OrderingKind::kNeither);
  EXPECT_FALSE(cert.witnesses.empty());
  EXPECT_STREQ(OrderingKindName(OrderingKind::kNearly), "NEARLY");
}

TEST(CertifyTest, FullOrderingsReportTheirParity) {
  const OrderingCertificate cert =
      Certify(FreeCyclic(10, 3), CyclicOrdering::Natural(10), STParams(3, 3));
  ASSERT_TRUE(cert.full);
  ASSERT_TRUE(cert.circuit_phase.has_value());
  EXPECT_EQ(*cert.circuit_phase, 1);
  const OrderingCertificate shifted =
      Certify(FreeCyclic(10, 3), CyclicOrdering::Natural(10).Rotated(1), STParams(3, 3));
  EXPECT_EQ(*shifted.circuit_phase, 0);
}

// All classes by brute force over every permutation.
std::set<std::vector<int>> BruteForceClasses(const Matroid& m, STParams p, SearchMode mode) {
  std::vector<int> order = CyclicOrdering::Natural(m.size()).order();
  std::set<std::vector<int>> out;
  do {
    const CyclicOrdering sigma(order);
    const OrderingCertificate cert = Certify(m, sigma, p);
    if (mode == SearchMode::kFull ? cert.full : cert.nearly) {
      out.insert(sigma.Canonical().order());
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

TEST(FindOrderingsTest, MatchesBruteForceOverAllPermutations) {
  struct Case {
    Matroid m;
    STParams p;
  };
  const std::vector<Case> cases = {{Uniform(2, 4), {3, 3}}, {Wheel(3), {3, 3}},
                                   {Whirl(3), {3, 3}},      {FreeCyclic(6, 3), {3, 3}},
                                   {Uniform(2, 5), {3, 4}}, {FreeSpike(3), {4, 4}},
                                   {Uniform(3, 7), {4, 5}}};
  for (const Case& c : cases) {
    for (SearchMode mode : {SearchMode::kNearly, SearchMode::kFull}) {
      std::set<std::vector<int>> found;
      for (const CyclicOrdering& sigma : FindOrderings(c.m, c.p, mode)) {
        EXPECT_TRUE(found.insert(sigma.Canonical().order()).second) << "duplicate class";
      }
      EXPECT_EQ(found, BruteForceClasses(c.m, c.p, mode)) << c.m.name() << c.p.ToString();
    }
  }
}

TEST(FindOrderingsTest, KnownCounts) {
  EXPECT_EQ(FindOrderings(Uniform(2, 4), STParams(3, 3), SearchMode::kNearly).size(), 3U);
  EXPECT_EQ(FindOrderings(Uniform(2, 4), STParams(3, 3), SearchMode::kNearly, 2).size(), 2U);
  const auto wheel = FindOrderings(Wheel(4), STParams(3, 3), SearchMode::kNearly);
  ASSERT_FALSE(wheel.empty());
  EXPECT_TRUE(std::any_of(wheel.begin(), wheel.end(), [](const CyclicOrdering& sigma) {
    return sigma.EquivalentTo(CyclicOrdering::Natural(8));
  }));
  EXPECT_THROW(FindOrderings(Uniform(2, SearchCap() + 1), STParams(3, 3), SearchMode::kNearly),
               EnumerationLimitError);
}

TEST(WindowPropertyTest, HoldOnFreeCyclicAndTruncations) {
  struct Case {
    Matroid m;
    STParams p;
  };
  std::vector<Case> cases;
  for (int n = 6; n <= 12; n += 2) {
    for (int s = 3; s <= std::min(5, (n + 2) / 2); ++s) {
      cases.push_back({FreeCyclic(n, s), {s, s}});
      if (n >= 2 * s) cases.push_back({TruncatedFreeCyclic(n, s, s + 2), {s, s + 2}});
    }
  }
  for (const Case& c : cases) {
    const int n = c.m.size();
    const CyclicOrdering sigma = CyclicOrdering::Natural(n);
    ASSERT_TRUE(IsFullyCyclic(c.m, sigma, c.p)) << c.m.name();
    EXPECT_TRUE(IsFullyCyclic(c.m, sigma.Reversed(), c.p)) << c.m.name();
    EXPECT_TRUE(IsFullyCyclic(c.m.Dual(), sigma, STParams(c.p.t, c.p.s))) << c.m.name();
    EXPECT_TRUE(CheckMatroidRank(c.m, sigma, c.p).ok) << c.m.name();
    EXPECT_EQ(2 * c.m.Rank(), n + c.p.s - c.p.t);
    const BoundReport bounds = BoundPredicates(n, c.p, true);
    EXPECT_TRUE(bounds.nearly_allowed && bounds.full_allowed);
    if (n > c.p.s + c.p.t - 2) {
      EXPECT_TRUE(CheckFlankingWindows(c.m, sigma, c.p).ok) << c.m.name();
      EXPECT_TRUE(CheckWindowStructure(c.m, sigma, c.p).ok) << c.m.name();
      EXPECT_TRUE(CheckWindowClosures(c.m, sigma, c.p).ok) << c.m.name();
      const VerificationReport ranks = CheckWindowRanks(c.m, sigma, c.p);
      EXPECT_TRUE(ranks.ok) << c.m.name();
      EXPECT_GT(ranks.checked, 0);
    }
    if (n >= c.p.s + 2 * c.p.t - 4) {
      EXPECT_TRUE(CheckUniqueWindowCircuit(c.m, sigma, c.p).ok) << c.m.name();
    }
    if (n >= c.p.s + c.p.t) {
      EXPECT_TRUE(CheckOddCircuitsUpgrade(c.m, sigma, c.p).ok);
    }
    EXPECT_TRUE(CheckNearlyUpgrade(c.m, sigma, c.p).ok);
  }
}

TEST(WindowPropertyTest, RankPredictionMatchesOracleRank) {
  const Matroid m = FreeCyclic(12, 4);
  const CyclicOrdering sigma = CyclicOrdering::Natural(12);
  const STParams p(4, 4);
  for (int i = 1; i <= 12; ++i) {
    for (int k = 1; k <= 9; ++k) {
      const RankPrediction r = PredictWindowRank(m, sigma, p, i, k);
      EXPECT_EQ(r.actual, testing::NaiveRank([&](SubsetMask x) { return m.IsIndependent(x); },
                                             sigma.WindowOfLength(i, k)));
      EXPECT_TRUE(r.matches()) << i << " " << k;
    }
  }
  EXPECT_THROW(PredictWindowRank(m, sigma, p, 1, 10), std::invalid_argument);
}

TEST(WindowPropertyTest, PreconditionsAreEnforced) {
  const CyclicOrdering grouped = CyclicOrdering::FromOneBased({1, 3, 5, 7, 2, 4, 6, 8});
  EXPECT_THROW(CheckFlankingWindows(Wheel(4), grouped, STParams(3, 3)), std::invalid_argument);
  // n = s + t - 2 leaves no room for the window properties.
  EXPECT_THROW(CheckWindowRanks(Uniform(2, 5), CyclicOrdering::Natural(5), STParams(3, 4)),
               std::invalid_argument);
  EXPECT_THROW(CheckNearlyUpgrade(FreeCyclic(8, 2), CyclicOrdering::Natural(8), STParams(2, 2)),
               std::invalid_argument);
  EXPECT_THROW(Certify(Uniform(2, 4), CyclicOrdering::Natural(5), STParams(3, 3)),
               std::invalid_argument);
  EXPECT_THROW(STParams(1, 3), std::invalid_argument);
}

TEST(BoundsTest, SizeAndParityPredicates) {
  EXPECT_FALSE(BoundPredicates(4, STParams(3, 4), false).nearly_allowed);
  EXPECT_TRUE(BoundPredicates(5, STParams(3, 4), true).full_allowed);
  EXPECT_FALSE(BoundPredicates(7, STParams(3, 4), true).full_allowed);
  EXPECT_FALSE(BoundPredicates(9, STParams(3, 3), true).full_allowed);
  EXPECT_TRUE(UpgradeBoundsHold(8, STParams(3, 3)));
  EXPECT_FALSE(UpgradeBoundsHold(7, STParams(3, 3)));
  // 3*3 + 5 - 5 = 9 and 3 + 10 - 1 = 12.
  EXPECT_FALSE(UpgradeBoundsHold(11, STParams(5, 3)));
  EXPECT_TRUE(UpgradeBoundsHold(12, STParams(5, 3)));
}

TEST(BoundsTest, EveryFullOrderingFoundRespectsTheBounds) {
  for (const Matroid& m : {Uniform(2, 5), Uniform(3, 6), FreeCyclic(6, 3), Wheel(3)}) {
    for (int s = 2; s <= 4; ++s) {
      for (int t = 2; t <= 4; ++t) {
        if (m.size() < std::max(s, t) - 1) continue;
        for (const CyclicOrdering& sigma : FindOrderings(m, STParams(s, t), SearchMode::kFull)) {
          const BoundReport b = BoundPredicates(m.size(), STParams(s, t), true);
          EXPECT_TRUE(b.nearly_allowed && b.full_allowed)
              << m.name() << " " << s << "," << t << " " << sigma.OneBased().size();
        }
      }
    }
  }
}

}  // namespace
}  // namespace cyclicmat
