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


// Weak maps and quotients between matroids of equal size, and the checks that
// relate (s,t)-cyclic matroids to truncations of the free-cyclic family.

#ifndef CYCLICMAT_WEAKMAP_H_
#define CYCLICMAT_WEAKMAP_H_

#include <optional>
#include <string>
#include <vector>

#include "cyclicmat/cyclic.h"
#include "cyclicmat/matroid.h"
#include "cyclicmat/subset.h"
#include "cyclicmat/transversal.h"

namespace cyclicmat {

struct WeakMapReport {
  bool holds = true;
  // A circuit of the source whose image contains no circuit of the target, or
  // for the independence route an independent set of the target that pulls
  // back dependent.
  std::optional<SubsetMask> violating;
  std::string relation;
  std::vector<std::string> notes;
};

// phi: E(m1) -> E(m2) is a weak map when the image of every circuit of m1 is
// dependent in m2. Throws std::invalid_argument on a size mismatch.
WeakMapReport IsWeakMap(const Matroid& m1, const Matroid& m2, const ElementBijection& phi);

// The same relation tested from independent sets: every independent set of m2
// pulls back to an independent set of m1. Exhaustive over 2^n subsets.
WeakMapReport IsWeakMapByIndependence(const Matroid& m1, const Matroid& m2,
                                      const ElementBijection& phi);

// m2 is a quotient of m1 when every circuit of m1 is a union of circuits of m2,
// tested as: each e in C lies in some circuit of m2 inside C.
WeakMapReport IsQuotient(const Matroid& m1, const Matroid& m2);

// Second route: every flat of m2 is a flat of m1. Exhaustive over 2^n subsets.
bool IsQuotientByFlats(const Matroid& m1, const Matroid& m2);

struct DominationResult {
  // Every union of k consecutive intervals, 1 <= k <= m, has rank in `target`
  // at most its rank in the dual of the presentation.
  bool condition = false;
  std::string witness;
  // Filled when the condition holds: identity weak map from the dual of the
  // presentation to `target`.
  std::optional<WeakMapReport> weak_map;

  // False only if the condition holds without the weak map following.
  bool consistent() const { return !condition || (weak_map && weak_map->holds); }
};

// Throws std::invalid_argument when `target` is on a different ground set size
// or the presentation leaves an element uncovered.
DominationResult CheckIntervalRankDomination(const Matroid& target,
                                             const MultiPathPresentation& p);

// T^{(t-s)/2}(FreeCyclic(n, s)) certified on the natural ordering. Requires
// t >= s >= 2, n even, n >= s + t - 2 and s ≡ t (mod 2).
OrderingCertificate CheckTruncationCyclic(int n, int s, int t);

// T^{(t-s)/2}(FreeCyclic(n, s)).
Matroid TruncatedFreeCyclic(int n, int s, int t);

struct ImageReport {
  WeakMapReport weak_map;
  // 0 or 1: how far sigma was rotated so its circuit windows start at odd
  // positions.
  int rotation = 0;
  // The bijection used, from E(T(FreeCyclic)) to E(m).
  std::vector<int> map;
};

// Requires sigma to be an (s,t)-cyclic ordering of m with n >= s + t - 1 and
// t >= s. Aligns sigma so that circuit windows sit at odd starts and tests
// that position p of the truncated free-cyclic matroid maps weakly onto the
// element of m at position p.
ImageReport CheckWeakMapImage(const Matroid& m, const CyclicOrdering& sigma, STParams p);

}  // namespace cyclicmat

#endif  // CYCLICMAT_WEAKMAP_H_
