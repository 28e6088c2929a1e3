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


// Brute-force reference implementations and seeded generators shared by the
// unit tests. Every oracle here works from definitions by exhaustive search
// and shares no code with the library beyond SubsetMask.

#ifndef CYCLICMAT_TESTS_TESTING_ORACLES_H_
#define CYCLICMAT_TESTS_TESTING_ORACLES_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "cyclicmat/subset.h"

namespace cyclicmat::testing {

using Word = SubsetMask::Word;

// SplitMix64: identical streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  int Below(int bound) { return static_cast<int>(Next() % static_cast<std::uint64_t>(bound)); }
  int Between(int lo, int hi) { return lo + Below(hi - lo + 1); }
  SubsetMask Subset(int n) { return SubsetMask(Next() & SubsetMask::Full(n).bits()); }
  std::vector<int> Permutation(int n) {
    std::vector<int> p(n);
    for (int e = 0; e < n; ++e) p[e] = e;
    for (int e = n - 1; e > 0; --e) std::swap(p[e], p[Below(e + 1)]);
    return p;
  }

 private:
  std::uint64_t state_;
};

using IndepFn = std::function<bool(SubsetMask)>;

// Calls f on every subset of x.
template <typename F>
void ForEachSubset(SubsetMask x, F&& f) {
  const Word bits = x.bits();
  Word y = 0;
  while (true) {
    f(SubsetMask(y));
    if (y == bits) break;
    y = (y - bits) & bits;
  }
}

// Whether every element of x can be given its own vertex, tried by recursion
// over all assignments.
inline bool NaiveMatchable(const std::vector<SubsetMask>& nbhds, SubsetMask x) {
  const std::vector<int> elements = x.Elements();
  std::vector<bool> used(nbhds.size(), false);
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == elements.size()) return true;
    for (std::size_t v = 0; v < nbhds.size(); ++v) {
      if (used[v] || !nbhds[v].contains(elements[k])) continue;
      used[v] = true;
      if (place(k + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(0);
}

// Largest matchable subset size of x.
inline int NaiveMatchingSize(const std::vector<SubsetMask>& nbhds, SubsetMask x) {
  int best = 0;
  ForEachSubset(x, [&](SubsetMask y) {
    if (y.size() > best && NaiveMatchable(nbhds, y)) best = y.size();
  });
  return best;
}

// Largest independent subset of x by exhaustive search.
inline int NaiveRank(const IndepFn& indep, SubsetMask x) {
  int best = 0;
  ForEachSubset(x, [&](SubsetMask y) {
    if (y.size() > best && indep(y)) best = y.size();
  });
  return best;
}

inline std::vector<SubsetMask> NaiveBases(const IndepFn& indep, int n) {
  const int r = NaiveRank(indep, SubsetMask::Full(n));
  std::vector<SubsetMask> out;
  ForEachSubset(SubsetMask::Full(n), [&](SubsetMask y) {
    if (y.size() == r && indep(y)) out.push_back(y);
  });
  return out;
}

// Dependent sets all of whose one-smaller subsets are independent.
inline std::vector<SubsetMask> NaiveCircuits(const IndepFn& indep, int n) {
  std::vector<SubsetMask> out;
  ForEachSubset(SubsetMask::Full(n), [&](SubsetMask y) {
    if (y.empty() || indep(y)) return;
    bool minimal = true;
    y.ForEach([&](int e) { minimal = minimal && indep(y.Without(e)); });
    if (minimal) out.push_back(y);
  });
  return out;
}

// Minimal sets meeting every basis.
inline std::vector<SubsetMask> NaiveCocircuits(const IndepFn& indep, int n) {
  const std::vector<SubsetMask> bases = NaiveBases(indep, n);
  auto meets_all = [&](SubsetMask y) {
    for (SubsetMask b : bases) {
      if (!b.Intersects(y)) return false;
    }
    return true;
  };
  std::vector<SubsetMask> out;
  ForEachSubset(SubsetMask::Full(n), [&](SubsetMask y) {
    if (y.empty() || !meets_all(y)) return;
    bool minimal = true;
    y.ForEach([&](int e) { minimal = minimal && !meets_all(y.Without(e)); });
    if (minimal) out.push_back(y);
  });
  return out;
}

// Independent in the dual iff disjoint from some basis.
inline bool NaiveDualIndependent(const IndepFn& indep, int n, SubsetMask x) {
  for (SubsetMask b : NaiveBases(indep, n)) {
    if (!b.Intersects(x)) return true;
  }
  return false;
}

// Elements e with r(x + e) = r(x).
inline SubsetMask NaiveClosure(const IndepFn& indep, int n, SubsetMask x) {
  const int r = NaiveRank(indep, x);
  SubsetMask out;
  for (int e = 0; e < n; ++e) {
    if (NaiveRank(indep, x.With(e)) == r) out = out.With(e);
  }
  return out;
}

// Elements at one-based positions i..j of the identity ordering, wrapping.
inline SubsetMask NaiveWindow(int n, int i, int j) {
  SubsetMask out;
  const int len = ((j - i) % n + n) % n + 1;
  for (int k = 0; k < len; ++k) out = out.With(((i - 1 + k) % n + n) % n);
  return out;
}

// Random neighborhoods on n elements: m vertices, none empty.
inline std::vector<SubsetMask> RandomNeighborhoods(Rng& rng, int n, int m) {
  std::vector<SubsetMask> out;
  for (int v = 0; v < m; ++v) {
    SubsetMask nb;
    while (nb.empty()) nb = rng.Subset(n);
    out.push_back(nb);
  }
  return out;
}

}  // namespace cyclicmat::testing

#endif  // CYCLICMAT_TESTS_TESTING_ORACLES_H_
