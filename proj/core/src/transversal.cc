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

#include "cyclicmat/transversal.h"

#include <set>
#include <stdexcept>
#include <utility>

namespace cyclicmat {
namespace {

// Kuhn's augmenting-path search from `left` over right vertices adjacent via
// `adj`. On failure, visited_left holds the vertices reached by alternating
// paths from `left`.
bool Augment(int left, const std::vector<SubsetMask>& adj, SubsetMask& visited_right,
             SubsetMask& visited_left, std::vector<int>& match_left,
             std::vector<int>& match_right) {
  visited_left = visited_left.With(left);
  bool found = false;
  (adj[left] - visited_right).ForEach([&](int right) {
    if (found || visited_right.contains(right)) return;
    visited_right = visited_right.With(right);
    const int owner = match_right[right];
    if (owner < 0 ||
        Augment(owner, adj, visited_right, visited_left, match_left, match_right)) {
      match_left[left] = right;
      match_right[right] = left;
      found = true;
    }
  });
  return found;
}

std::string Pair(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void RequireFreeCyclicParameters(int n, int s) {
  if (s < 2) throw std::invalid_argument("free-cyclic matroid needs s >= 2");
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("free-cyclic matroid needs even n >= 2");
  if (n < 2 * s - 2) {
    throw std::invalid_argument("free-cyclic matroid needs n >= 2s - 2 (got n=" +
                                std::to_string(n) + ", s=" + std::to_string(s) + ")");
  }
  if (n > kMaxGroundSize) throw std::invalid_argument("ground set too large");
}

std::vector<SubsetMask> IntervalNeighborhoods(int n, const std::vector<int>& starts,
                                              const std::vector<int>& ends) {
  if (starts.empty() || starts.size() != ends.size()) {
    throw std::invalid_argument("multi-path presentation needs matching, non-empty endpoint lists");
  }
  const int m = static_cast<int>(starts.size());
  for (int i = 0; i < m; ++i) {
    if (starts[i] < 1 || starts[i] > n || ends[i] < 1 || ends[i] > n) {
      throw std::invalid_argument("multi-path endpoint out of range");
    }
  }
  if (std::set<int>(starts.begin(), starts.end()).size() != starts.size() ||
      std::set<int>(ends.begin(), ends.end()).size() != ends.size()) {
    throw std::invalid_argument("multi-path endpoints must be distinct");
  }
  // With two or fewer intervals every arrangement is cyclically monotone.
  if (m >= 3) {
    for (int i = 0; i < m; ++i) {
      const int prev = (i + m - 1) % m;
      const int next = (i + 1) % m;
      if (!CyclicRange(n, starts[prev], starts[next]).contains(starts[i] - 1) ||
          !CyclicRange(n, ends[prev], ends[next]).contains(ends[i] - 1)) {
        throw std::invalid_argument("multi-path endpoints are not cyclically monotone at " +
                                    std::to_string(i + 1));
      }
    }
  }
  std::vector<SubsetMask> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.push_back(CyclicRange(n, starts[i], ends[i]));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && out[i].IsSubsetOf(out[j])) {
        throw std::invalid_argument("multi-path intervals are not an antichain: " +
                                    Pair(i + 1, j + 1));
      }
    }
  }
  return out;
}

}  // namespace

BipartitePresentation::BipartitePresentation(GroundSet ground,
                                             std::vector<SubsetMask> neighborhoods)
    : ground_(std::move(ground)), neighborhoods_(std::move(neighborhoods)) {
  if (neighborhoods_.empty() || static_cast<int>(neighborhoods_.size()) > kMaxGroundSize) {
    throw std::invalid_argument("presentation needs between 1 and 64 neighborhoods");
  }
  incidence_.assign(ground_.size(), SubsetMask());
  for (int i = 0; i < m(); ++i) {
    if (!neighborhoods_[i].IsSubsetOf(ground_.All())) {
      throw std::invalid_argument("neighborhood outside the ground set");
    }
    neighborhoods_[i].ForEach([&](int e) { incidence_[e] = incidence_[e].With(i); });
  }
}

BipartitePresentation::BipartitePresentation(int n, std::vector<SubsetMask> neighborhoods)
    : BipartitePresentation(GroundSet(n), std::move(neighborhoods)) {}

SubsetMask BipartitePresentation::Neighbors(SubsetMask vertices) const {
  SubsetMask out;
  vertices.ForEach([&](int i) { out |= neighborhoods_[i]; });
  return out;
}

std::vector<int> BipartitePresentation::EmptyNeighborhoods() const {
  std::vector<int> out;
  for (int i = 0; i < m(); ++i) {
    if (neighborhoods_[i].empty()) out.push_back(i + 1);
  }
  return out;
}

SubsetMask BipartitePresentation::Uncovered() const {
  SubsetMask covered;
  for (SubsetMask nb : neighborhoods_) covered |= nb;
  return ground_.All() - covered;
}

MatchingResult MaxMatching(const BipartitePresentation& p, SubsetMask avoid) {
  std::vector<SubsetMask> adj;
  adj.reserve(p.m());
  for (SubsetMask nb : p.neighborhoods()) adj.push_back(nb - avoid);

  MatchingResult result;
  result.matching.assign(p.m(), -1);
  std::vector<int> match_right(p.n(), -1);
  for (int i = 0; i < p.m(); ++i) {
    SubsetMask visited_right;
    SubsetMask visited_left;
    if (Augment(i, adj, visited_right, visited_left, result.matching, match_right)) {
      ++result.size;
    } else {
      result.deficiency = visited_left;
    }
  }
  return result;
}

int MatchableSize(const BipartitePresentation& p, SubsetMask x) {
  std::vector<SubsetMask> adj(p.n());
  x.ForEach([&](int e) { adj[e] = p.Incidence(e); });
  std::vector<int> match_left(p.n(), -1);
  std::vector<int> match_right(p.m(), -1);
  int size = 0;
  x.ForEach([&](int e) {
    SubsetMask visited_right;
    SubsetMask visited_left;
    if (Augment(e, adj, visited_right, visited_left, match_left, match_right)) ++size;
  });
  return size;
}

Matroid TransversalMatroid(const BipartitePresentation& p, std::string name) {
  return Matroid(
      p.ground(), [p](SubsetMask x) { return MatchableSize(p, x) == x.size(); },
      std::move(name));
}

Matroid DualTransversal(const BipartitePresentation& p, std::string name) {
  const int matching_number = MaxMatching(p).size;
  return Matroid(
      p.ground(),
      [p, matching_number](SubsetMask x) { return MaxMatching(p, x).size == matching_number; },
      std::move(name));
}

MultiPathPresentation::MultiPathPresentation(int n, std::vector<int> starts,
                                             std::vector<int> ends)
    : starts_(std::move(starts)),
      ends_(std::move(ends)),
      base_(n, IntervalNeighborhoods(n, starts_, ends_)),
      dual_(DualTransversal(base_)) {}

MultiPathPresentation MultiPathPresentation::FreeCyclic(int n, int s) {
  RequireFreeCyclicParameters(n, s);
  std::vector<int> starts;
  std::vector<int> ends;
  for (int i = 1; i <= n / 2; ++i) {
    starts.push_back(WrapPosition(n, 2 * i - 1));
    ends.push_back(WrapPosition(n, 2 * i + s - 2));
  }
  return MultiPathPresentation(n, std::move(starts), std::move(ends));
}

SubsetMask MultiPathPresentation::NeighborsOfRange(int i, int j) const {
  SubsetMask out;
  const int length = RangeLength(i, j);
  for (int k = 0; k < length; ++k) out |= base_.Neighborhood((i - 1 + k) % m() + 1);
  return out;
}

Matroid FreeCyclic(int n, int s) {
  return MultiPathPresentation::FreeCyclic(n, s).DualMatroid().Renamed(
      "psi(" + std::to_string(n) + "," + std::to_string(s) + ")");
}

bool FreeCyclicBasisByWindows(int n, int s, SubsetMask x) {
  RequireFreeCyclicParameters(n, s);
  if (x.size() != n / 2) return false;
  for (int i = 1; i <= n; i += 2) {
    for (int k = 0; k <= n / 2 - s; ++k) {
      if ((x & CyclicRange(n, i, i + s - 1 + 2 * k)).size() >= s + k) return false;
    }
  }
  return true;
}

ElementBijection SelfDualityMap(int n, int s) {
  RequireFreeCyclicParameters(n, s);
  return s % 2 == 0 ? ElementBijection::Identity(n) : ElementBijection::Rotation(n, 1);
}

CircuitClassification ClassifyCircuit(const MultiPathPresentation& p, SubsetMask c) {
  const Matroid& dual = p.DualMatroid();
  if (!dual.IsCircuit(c)) {
    throw std::invalid_argument("classify: " + c.ToString() + " is not a circuit");
  }
  const int n = p.n();
  const int m = p.m();
  if (c.size() == n - m + 1) return {CircuitShape::kSpanning, 0, 0};

  const SubsetMask closure = dual.Closure(c);
  for (int i = 1; i <= m; ++i) {
    for (int length = 1; length <= m; ++length) {
      const int j = (i - 1 + length - 1) % m + 1;
      const SubsetMask nbrs = p.NeighborsOfRange(i, j);
      const SubsetMask span = CyclicRange(n, p.start(i), p.end(j));
      if (nbrs != span) continue;
      if (!c.IsSubsetOf(nbrs) || c.size() != nbrs.size() - length + 1) continue;
      if (length > 1) {
        const SubsetMask left_tail = nbrs - p.NeighborsOfRange(i % m + 1, j);
        const SubsetMask right_tail = nbrs - p.NeighborsOfRange(i, (j + m - 2) % m + 1);
        if (!left_tail.IsSubsetOf(c) || !right_tail.IsSubsetOf(c)) continue;
      }
      if (!span.IsSubsetOf(closure)) continue;
      return {CircuitShape::kInterval, i, j};
    }
  }
  return {};
}

VerificationReport CheckDualRank(const MultiPathPresentation& p) {
  VerificationReport report("dual-rank", "multipath(n=" + std::to_string(p.n()) +
                                             ",m=" + std::to_string(p.m()) + ")");
  const int rank = p.DualMatroid().Rank();
  report.Expect(rank == p.n() - p.m(),
                "rank " + std::to_string(rank) + " != " + std::to_string(p.n() - p.m()));
  return report;
}

VerificationReport CheckDeficiencyCircuits(const MultiPathPresentation& p) {
  VerificationReport report("deficiency-circuits", "");
  const int m = p.m();
  const SubsetMask::Word vertex_sets = SubsetMask::Word{1} << m;
  for (SubsetMask c : p.DualMatroid().Circuits()) {
    for (SubsetMask::Word bits = 1; bits < vertex_sets; ++bits) {
      const SubsetMask vertices(bits);
      const SubsetMask nbrs = p.base().Neighbors(vertices);
      if ((nbrs - c).size() >= vertices.size()) continue;
      report.Expect(c.IsSubsetOf(nbrs) && c.size() == nbrs.size() - vertices.size() + 1,
                    "circuit " + c.ToString() + " with J=" + vertices.ToString());
    }
  }
  return report;
}

VerificationReport CheckCircuitClassification(const MultiPathPresentation& p) {
  VerificationReport report("circuit-classification", "");
  for (SubsetMask c : p.DualMatroid().Circuits()) {
    report.Expect(ClassifyCircuit(p, c).shape != CircuitShape::kUnclassified,
                  "unclassified circuit " + c.ToString());
  }
  return report;
}

VerificationReport CheckSelfDuality(int n, int s) {
  VerificationReport report("self-duality", "psi(" + std::to_string(n) + "," +
                                                std::to_string(s) + ")");
  const Matroid psi = FreeCyclic(n, s);
  const ElementBijection phi = SelfDualityMap(n, s);
  report.Expect(psi.Dual().Circuits() == psi.Circuits().Map(phi),
                "circuits(dual) != phi(circuits)");
  const ElementBijection inverse = phi.Inverse();
  for (SubsetMask basis : psi.Bases()) {
    const SubsetMask image = inverse.Apply(basis.Complement(n));
    report.Expect(psi.IsBasis(image), "phi^-1(E - B) not a basis for B=" + basis.ToString());
  }
  return report;
}

VerificationReport CheckWindowBasisCharacterization(int n, int s) {
  VerificationReport report("window-basis-characterization",
                            "psi(" + std::to_string(n) + "," + std::to_string(s) + ")");
  const Matroid psi = FreeCyclic(n, s);
  const SubsetMask::Word count = SubsetMask::Word{1} << n;
  for (SubsetMask::Word bits = 0; bits < count; ++bits) {
    const SubsetMask x(bits);
    report.Expect(FreeCyclicBasisByWindows(n, s, x) == psi.IsBasis(x),
                  "disagreement on " + x.ToString());
  }
  return report;
}

}  // namespace cyclicmat
