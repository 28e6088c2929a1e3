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

// Transversal matroids, their duals, and multi-path presentations whose
// neighborhoods are cyclic intervals.
//
// Vertices of the non-element side are numbered 1..m. Where a set of such
// vertices is returned as a SubsetMask, vertex i occupies bit i-1.

#ifndef CYCLICMAT_TRANSVERSAL_H_
#define CYCLICMAT_TRANSVERSAL_H_

#include <optional>
#include <string>
#include <vector>

#include "cyclicmat/matroid.h"
#include "cyclicmat/report.h"
#include "cyclicmat/subset.h"

namespace cyclicmat {

// A bipartite graph between E = {e_1..e_n} and [m], given by neighborhoods.
class BipartitePresentation {
 public:
  BipartitePresentation(GroundSet ground, std::vector<SubsetMask> neighborhoods);
  BipartitePresentation(int n, std::vector<SubsetMask> neighborhoods);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  int m() const { return static_cast<int>(neighborhoods_.size()); }
  // N(i) for one-based i.
  SubsetMask Neighborhood(int i) const { return neighborhoods_[i - 1]; }
  const std::vector<SubsetMask>& neighborhoods() const { return neighborhoods_; }
  // N(J) for a vertex set J ⊆ [m].
  SubsetMask Neighbors(SubsetMask vertices) const;
  // Vertices adjacent to element e.
  SubsetMask Incidence(int e) const { return incidence_[e]; }
  // Vertices whose neighborhood is empty (one-based).
  std::vector<int> EmptyNeighborhoods() const;
  // Elements lying in no neighborhood: the loops of the transversal matroid.
  SubsetMask Uncovered() const;

 private:
  GroundSet ground_;
  std::vector<SubsetMask> neighborhoods_;
  std::vector<SubsetMask> incidence_;
};

struct MatchingResult {
  int size = 0;
  // matching[i-1] is the element matched to vertex i, or -1.
  std::vector<int> matching;
  // Present iff size < m: a vertex set J with |N(J) - avoid| < |J|, read off
  // the alternating-path search of the last vertex that failed to augment.
  std::optional<SubsetMask> deficiency;

  bool complete() const { return !deficiency.has_value(); }
};

// Maximum matching of [m] into E - avoid by augmenting paths, trying vertices
// in increasing order.
MatchingResult MaxMatching(const BipartitePresentation& p, SubsetMask avoid = {});

// Size of a largest matchable subset of x (its rank in the transversal matroid).
int MatchableSize(const BipartitePresentation& p, SubsetMask x);

// X independent iff X can be matched into [m].
Matroid TransversalMatroid(const BipartitePresentation& p, std::string name = {});

// X independent iff E - X contains a matching of maximum size; when [m] is
// completely matchable this is the complete-matching test into E - X.
Matroid DualTransversal(const BipartitePresentation& p, std::string name = {});

// A presentation with N(i) = {e_{x_i}, ..., e_{y_i}} in the natural cyclic
// order, subject to the multi-path conditions: distinct starts, distinct ends,
// both cyclically monotone, and no interval contained in another.
class MultiPathPresentation {
 public:
  // One-based positions; throws std::invalid_argument on a violated condition.
  MultiPathPresentation(int n, std::vector<int> starts, std::vector<int> ends);

  // x_i = 2i - 1 and y_i = 2i + s - 2 for i in [n/2].
  static MultiPathPresentation FreeCyclic(int n, int s);

  int n() const { return base_.n(); }
  int m() const { return base_.m(); }
  int start(int i) const { return starts_[i - 1]; }
  int end(int i) const { return ends_[i - 1]; }
  const BipartitePresentation& base() const { return base_; }
  // The dual of the transversal matroid of base(); cached.
  const Matroid& DualMatroid() const { return dual_; }

  // N([i, j]) for the cyclic vertex range i, i+1, ..., j.
  SubsetMask NeighborsOfRange(int i, int j) const;
  // Number of vertices in the cyclic range [i, j].
  int RangeLength(int i, int j) const { return (j - i + m()) % m() + 1; }

 private:
  std::vector<int> starts_;
  std::vector<int> ends_;
  BipartitePresentation base_;
  Matroid dual_;
};

// The dual of the transversal matroid of the free-cyclic presentation with
// N(i) = {e_{2i-1}, ..., e_{2i+s-2}} (indices mod n), rank n/2. Requires n even,
// s >= 2 and n >= 2s - 2.
Matroid FreeCyclic(int n, int s);

// Basis test that only counts elements in odd-start windows: |X| = n/2 and
// |X ∩ {e_i..e_{i+s-1+2k}}| < s + k for every odd i and 0 <= k <= n/2 - s.
bool FreeCyclicBasisByWindows(int n, int s, SubsetMask x);

// The identity when s is even, e_i -> e_{i+1} when s is odd. Maps circuits of
// FreeCyclic(n, s) onto circuits of its dual.
ElementBijection SelfDualityMap(int n, int s);

enum class CircuitShape { kSpanning, kInterval, kUnclassified };

struct CircuitClassification {
  CircuitShape shape = CircuitShape::kUnclassified;
  // The vertex range [first, last] (one-based) for kInterval.
  int first = 0;
  int last = 0;
};

// Classifies a circuit of p.DualMatroid(): either it has n - m + 1 elements, or
// some vertex range [i, j] has N([i,j]) = {e_{x_i}..e_{y_j}}, contains the
// circuit with |C| = |N([i,j])| - (j - i + 1) + 1, keeps both boundary
// differences inside C, and lies in the closure of C. Throws
// std::invalid_argument when c is not a circuit.
CircuitClassification ClassifyCircuit(const MultiPathPresentation& p, SubsetMask c);

// r(dual) = n - m.
VerificationReport CheckDualRank(const MultiPathPresentation& p);
// For every circuit C and vertex set J with |N(J) - C| < |J|: C ⊆ N(J) and
// |C| = |N(J)| - |J| + 1.
VerificationReport CheckDeficiencyCircuits(const MultiPathPresentation& p);
// Every circuit classifies.
VerificationReport CheckCircuitClassification(const MultiPathPresentation& p);
// circuits(dual) = phi(circuits), and phi^{-1}(E - B) is a basis for every basis B.
VerificationReport CheckSelfDuality(int n, int s);
// FreeCyclicBasisByWindows agrees with the matching oracle on every subset.
VerificationReport CheckWindowBasisCharacterization(int n, int s);

}  // namespace cyclicmat

#endif  // CYCLICMAT_TRANSVERSAL_H_
