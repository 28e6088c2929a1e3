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


#include "cyclicmat/constructions.h"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclicmat/cyclic.h"
#include "cyclicmat/transversal.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace cyclicmat {
namespace {

using testing::ForEachSubset;

// Edge list of the rank-r wheel graph in the library's element order:
// element 2i-2 is the spoke hub-i, element 2i-1 the rim edge i-(i+1).
std::vector<std::pair<int, int>> WheelEdges(int r) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= r; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % r + 1);
  }
  return edges;
}

// Forest test by repeated leaf stripping, independent of union-find.
bool IsForest(const std::vector<std::pair<int, int>>& edges, SubsetMask x, int vertices) {
  std::vector<std::pair<int, int>> left;
  x.ForEach([&](int e) { left.push_back(edges[e]); });
  bool changed = true;
  while (changed && !left.empty()) {
    changed = false;
    std::vector<int> degree(vertices, 0);
    for (const auto& [u, v] : left) {
      ++degree[u];
      ++degree[v];
    }
    for (std::size_t k = 0; k < left.size(); ++k) {
      if (degree[left[k].first] == 1 || degree[left[k].second] == 1) {
        left.erase(left.begin() + static_cast<long>(k));
        changed = true;
        break;
      }
    }
  }
  return left.empty();
}

long Binomial(int n, int k) {
  long out = 1;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

TEST(UniformTest, IndependentExactlyUpToRank) {
  for (int n = 1; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      const Matroid u = Uniform(r, n);
      ForEachSubset(u.All(), [&](SubsetMask x) { ASSERT_EQ(u.IsIndependent(x), x.size() <= r); });
      EXPECT_EQ(static_cast<long>(u.Circuits().size()), r < n ? Binomial(n, r + 1) : 0);
    }
  }
  EXPECT_EQ(Uniform(2, 5).name(), "U(2,5)");
  EXPECT_THROW(Uniform(3, 2), std::invalid_argument);
}

TEST(WheelTest, IsTheCycleMatroidOfTheWheelGraph) {
  for (int r = 2; r <= 6; ++r) {
    const Matroid wheel = Wheel(r);
    const auto edges = WheelEdges(r);
    ASSERT_EQ(wheel.size(), 2 * r);
    EXPECT_EQ(wheel.Rank(), r);
    ForEachSubset(wheel.All(), [&](SubsetMask x) {
      ASSERT_EQ(wheel.IsIndependent(x), IsForest(edges, x, r + 1)) << x.ToString();
    });
  }
}

TEST(WhirlTest, RelaxesTheRimCircuitHyperplane) {
  for (int r = 2; r <= 6; ++r) {
    const Matroid wheel = Wheel(r);
    const Matroid whirl = Whirl(r);
    const SubsetMask rim = WheelRim(r);
    EXPECT_TRUE(wheel.IsCircuit(rim));
    EXPECT_TRUE(whirl.IsBasis(rim));
    ForEachSubset(whirl.All(), [&](SubsetMask x) {
      ASSERT_EQ(whirl.IsIndependent(x), wheel.IsIndependent(x) || x == rim) << x.ToString();
    });
  }
}

TEST(WhirlTest, EqualsFreeCyclicWithThreeElementWindows) {
  for (int r = 3; r <= 6; ++r) {
    EXPECT_EQ(Whirl(r).Circuits(), FreeCyclic(2 * r, 3).Circuits()) << r;
  }
}

TEST(WheelTest, AlternatingOrderingIsNearlyThreeThree) {
  for (int r = 3; r <= 6; ++r) {
    EXPECT_TRUE(IsNearlyCyclic(Wheel(r), CyclicOrdering::Natural(2 * r), STParams(3, 3)));
    EXPECT_TRUE(IsNearlyCyclic(Whirl(r), CyclicOrdering::Natural(2 * r), STParams(3, 3)));
  }
}

TEST(FreeSpikeTest, MatchesTheRankFormula) {
  for (int r = 3; r <= 6; ++r) {
    const Matroid spike = FreeSpike(r);
    const PairPartition pairs = SpikePairs(r);
    ASSERT_EQ(static_cast<int>(pairs.pairs.size()), r);
    ForEachSubset(spike.All(), [&](SubsetMask x) {
      int p = 0;
      for (SubsetMask pair : pairs.pairs) p += pair.IsSubsetOf(x) ? 1 : 0;
      const int rank = std::min(r, x.size() - std::max(0, p - 1));
      ASSERT_EQ(spike.Rank(x), rank) << x.ToString();
    });
  }
}

TEST(FreeSpikeTest, PairUnionsAreFourCircuitsAndCocircuits) {
  for (int r = 3; r <= 6; ++r) {
    const Matroid spike = FreeSpike(r);
    const auto& pairs = SpikePairs(r).pairs;
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        EXPECT_TRUE(spike.IsCircuit(pairs[a] | pairs[b]));
        EXPECT_TRUE(spike.IsCocircuit(pairs[a] | pairs[b]));
      }
    }
  }
  EXPECT_TRUE(IsNearlyCyclic(FreeSpike(4), CyclicOrdering::Natural(8), STParams(4, 4)));
}

TEST(TruncateTest, CapsIndependentSets) {
  const Matroid psi = FreeCyclic(10, 3);
  for (int i = 0; i <= 5; ++i) {
    const Matroid t = Truncate(psi, i);
    EXPECT_EQ(t.Rank(), 5 - i);
    ForEachSubset(t.All(), [&](SubsetMask x) {
      ASSERT_EQ(t.IsIndependent(x), psi.IsIndependent(x) && x.size() <= 5 - i);
    });
  }
  EXPECT_EQ(Truncate(psi, 1).name(), "T^1(psi(10,3))");
  EXPECT_THROW(Truncate(psi, 6), std::invalid_argument);
  EXPECT_THROW(Truncate(psi, -1), std::invalid_argument);
}

}  // namespace
}  // namespace cyclicmat
