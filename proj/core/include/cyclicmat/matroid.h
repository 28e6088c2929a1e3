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

// Independence-oracle matroids and the quantities derived from them.

#ifndef CYCLICMAT_MATROID_H_
#define CYCLICMAT_MATROID_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclicmat/subset.h"

namespace cyclicmat {

// Thrown when an exhaustive enumeration is requested above its size cap.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest ground set for which circuits and cocircuits are enumerated.
// Defaults to 20; overridden by the CYCLICMAT_MAX_ENUM_N environment variable.
int EnumerationCap();

// Largest ground set for which a full independence table is cached.
inline constexpr int kMaxTableSize = 20;

// A family of subsets kept in canonical order (size, then lexicographic).
class CircuitFamily {
 public:
  CircuitFamily() = default;
  // Sorts and removes duplicates.
  explicit CircuitFamily(std::vector<SubsetMask> sets);

  const std::vector<SubsetMask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool Contains(SubsetMask x) const;
  // Members of the given cardinality.
  std::vector<SubsetMask> OfSize(int k) const;
  CircuitFamily Map(const ElementBijection& phi) const;

  bool operator==(const CircuitFamily&) const = default;

 private:
  std::vector<SubsetMask> sets_;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<SubsetMask> witnesses;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// An immutable matroid given by a deterministic independence predicate.
//
// Copies share state. Rank, circuit and cocircuit caches are filled on first
// use under std::call_once, so a Matroid may be read from several threads.
class Matroid {
 public:
  using IndependenceFn = std::function<bool(SubsetMask)>;

  Matroid(GroundSet ground, IndependenceFn indep, std::string name = {});

  const GroundSet& ground() const;
  int size() const;
  SubsetMask All() const { return SubsetMask::Full(size()); }
  const std::string& name() const;

  bool IsIndependent(SubsetMask x) const;
  // Size of a maximal independent subset of x (greedy).
  int Rank(SubsetMask x) const;
  // r(M).
  int Rank() const;
  int Corank() const { return size() - Rank(); }
  SubsetMask Closure(SubsetMask x) const;
  bool IsCircuit(SubsetMask x) const;
  // Tested directly: E - x is non-spanning and x is minimal with that property.
  bool IsCocircuit(SubsetMask x) const;
  bool IsBasis(SubsetMask x) const;

  // Inclusion-minimal dependent sets. Throws EnumerationLimitError when
  // size() > EnumerationCap().
  const CircuitFamily& Circuits() const;
  // Minimal sets whose complement is non-spanning, enumerated through
  // IsCocircuit rather than through Dual().Circuits().
  const CircuitFamily& Cocircuits() const;
  // All bases, in canonical order. Same cap as Circuits().
  std::vector<SubsetMask> Bases() const;

  // X independent in the dual iff r(E - X) = r(M).
  Matroid Dual() const;

  // Same matroid under a different display name.
  Matroid Renamed(std::string name) const;

 private:
  struct State;
  explicit Matroid(std::shared_ptr<const State> state);
  const std::vector<std::uint8_t>* Table() const;
  std::shared_ptr<const State> state_;
};

// Independence predicate: no member of `circuits` is contained in the set.
Matroid FromCircuits(GroundSet ground, CircuitFamily circuits, std::string name = {});

// M \ remove / contract on the ground set E - remove - contract, with elements
// renumbered in increasing order. Throws std::invalid_argument if the two sets
// meet.
Matroid Minor(const Matroid& m, SubsetMask remove, SubsetMask contract);

// The image of m under phi: X is independent iff phi^{-1}(X) is independent in m.
Matroid Relabel(const Matroid& m, const ElementBijection& phi);

// True iff |circuit ∩ cocircuit| != 1.
bool OrthogonalityHolds(SubsetMask circuit, SubsetMask cocircuit);

// Antichain, non-empty members and weak circuit elimination.
AxiomReport ValidateCircuitAxioms(const CircuitFamily& family, int n);

// Independence axioms on the oracle: the empty set is independent, downward
// closure, and augmentation between sets of adjacent sizes. Exhaustive for
// size() <= exhaustive_max_n, otherwise `samples` random pairs drawn from a
// generator seeded with `seed`.
AxiomReport CheckIndependenceAxioms(const Matroid& m, std::uint64_t seed = 1,
                                    int exhaustive_max_n = 12, int samples = 20000);

}  // namespace cyclicmat

#endif  // CYCLICMAT_MATROID_H_
