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

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclicmat {
namespace {

std::string Args(int a) { return "(" + std::to_string(a) + ")"; }

// Endpoints of every wheel edge: hub 0, rim vertices 1..r.
std::vector<std::pair<int, int>> WheelEdges(int r) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= r; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % r + 1);
  }
  return edges;
}

bool IsForest(const std::vector<std::pair<int, int>>& edges, int vertices, SubsetMask x) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  bool forest = true;
  x.ForEach([&](int e) {
    if (!forest) return;
    const int a = find(edges[e].first);
    const int b = find(edges[e].second);
    if (a == b) {
      forest = false;
    } else {
      parent[a] = b;
    }
  });
  return forest;
}

void ValidateSpike(const Matroid& spike, const PairPartition& partition) {
  const int n = spike.size();
  if (!ValidateCircuitAxioms(spike.Circuits(), n).ok()) {
    throw std::logic_error("free spike violates the circuit axioms");
  }
  const int r = static_cast<int>(partition.pairs.size());
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const SubsetMask u = partition.pairs[i] | partition.pairs[j];
      if (!spike.IsCircuit(u) || !spike.IsCocircuit(u)) {
        throw std::logic_error("free spike: " + u.ToString() +
                               " is not both a circuit and a cocircuit");
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    const SubsetMask window = CyclicRange(n, i, i + 2);
    bool in_circuit = false;
    bool in_cocircuit = false;
    window.Complement(n).ForEach([&](int e) {
      in_circuit = in_circuit || spike.IsCircuit(window.With(e));
      in_cocircuit = in_cocircuit || spike.IsCocircuit(window.With(e));
    });
    if (!in_circuit || !in_cocircuit) {
      throw std::logic_error("free spike: natural ordering is not nearly (4,4)-cyclic at " +
                             std::to_string(i));
    }
  }
}

}  // namespace

Matroid Uniform(int r, int n) {
  if (r < 0 || r > n) {
    throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
  }
  return Matroid(GroundSet(n), [r](SubsetMask x) { return x.size() <= r; },
                 "U(" + std::to_string(r) + "," + std::to_string(n) + ")");
}

SubsetMask WheelRim(int r) {
  SubsetMask rim;
  for (int i = 1; i <= r; ++i) rim = rim.With(2 * i - 1);
  return rim;
}

Matroid Wheel(int r) {
  if (r < 2 || 2 * r > kMaxGroundSize) throw std::invalid_argument("wheel needs r >= 2");
  const auto edges = WheelEdges(r);
  return Matroid(
      GroundSet(2 * r), [edges, r](SubsetMask x) { return IsForest(edges, r + 1, x); },
      "wheel" + Args(r));
}

Matroid Whirl(int r) {
  if (r < 2 || 2 * r > kMaxGroundSize) throw std::invalid_argument("whirl needs r >= 2");
  const Matroid wheel = Wheel(r);
  const SubsetMask rim = WheelRim(r);
  std::vector<SubsetMask> circuits;
  for (SubsetMask c : wheel.Circuits()) {
    if (c != rim) circuits.push_back(c);
  }
  for (int i = 1; i <= r; ++i) circuits.push_back(rim.With(2 * i - 2));
  return FromCircuits(GroundSet(2 * r), CircuitFamily(std::move(circuits)), "whirl" + Args(r));
}

PairPartition SpikePairs(int r) {
  PairPartition partition;
  for (int i = 1; i <= r; ++i) partition.pairs.push_back(SubsetMask::Of({2 * i - 2, 2 * i - 1}));
  return partition;
}

Matroid FreeSpike(int r) {
  if (r < 3 || 2 * r > kMaxGroundSize) throw std::invalid_argument("free spike needs r >= 3");
  const PairPartition partition = SpikePairs(r);
  Matroid spike(
      GroundSet(2 * r),
      [partition, r](SubsetMask x) {
        int pairs = 0;
        for (SubsetMask pair : partition.pairs) pairs += pair.IsSubsetOf(x) ? 1 : 0;
        const int rank = std::min(r, x.size() - std::max(0, pairs - 1));
        return rank == x.size();
      },
      "free_spike" + Args(r));
  if (spike.size() <= EnumerationCap()) ValidateSpike(spike, partition);
  return spike;
}

Matroid Truncate(const Matroid& m, int i) {
  const int rank = m.Rank();
  if (i < 0 || i > rank) {
    throw std::invalid_argument("truncation needs 0 <= i <= r(M) = " + std::to_string(rank));
  }
  const int cap = rank - i;
  return Matroid(
      m.ground(), [m, cap](SubsetMask x) { return x.size() <= cap && m.IsIndependent(x); },
      "T^" + std::to_string(i) + "(" + m.name() + ")");
}

}  // namespace cyclicmat
