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

#include "cyclicmat/matroid.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <random>
#include <utility>

namespace cyclicmat {
namespace {

// Independence tables are built eagerly on first query up to this size; larger
// oracles (up to kMaxTableSize) only build one when a full sweep needs it.
constexpr int kAutoTableSize = 16;
constexpr int kMaxViolations = 64;

using Word = SubsetMask::Word;

void AddViolation(AxiomReport& report, std::string axiom, std::vector<SubsetMask> witnesses) {
  if (static_cast<int>(report.violations.size()) >= kMaxViolations) return;
  report.violations.push_back({std::move(axiom), std::move(witnesses)});
}

}  // namespace

int EnumerationCap() {
  static const int cap = [] {
    const char* env = std::getenv("CYCLICMAT_MAX_ENUM_N");
    if (env == nullptr) return 20;
    int value = std::atoi(env);
    return std::clamp(value, 1, kMaxTableSize);
  }();
  return cap;
}

CircuitFamily::CircuitFamily(std::vector<SubsetMask> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), CanonicalLess);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool CircuitFamily::Contains(SubsetMask x) const {
  return std::binary_search(sets_.begin(), sets_.end(), x, CanonicalLess);
}

std::vector<SubsetMask> CircuitFamily::OfSize(int k) const {
  std::vector<SubsetMask> out;
  for (SubsetMask c : sets_) {
    if (c.size() == k) out.push_back(c);
  }
  return out;
}

CircuitFamily CircuitFamily::Map(const ElementBijection& phi) const {
  std::vector<SubsetMask> mapped;
  mapped.reserve(sets_.size());
  for (SubsetMask c : sets_) mapped.push_back(phi.Apply(c));
  return CircuitFamily(std::move(mapped));
}

struct Matroid::State {
  State(GroundSet g, IndependenceFn f, std::string n)
      : ground(std::move(g)), indep(std::move(f)), name(std::move(n)) {}

  GroundSet ground;
  IndependenceFn indep;
  std::string name;

  mutable std::once_flag table_once;
  mutable std::atomic<bool> table_ready{false};
  mutable std::vector<std::uint8_t> table;

  mutable std::once_flag rank_once;
  mutable int rank = 0;

  mutable std::once_flag circuits_once;
  mutable CircuitFamily circuits;

  mutable std::once_flag cocircuits_once;
  mutable CircuitFamily cocircuits;
};

Matroid::Matroid(GroundSet ground, IndependenceFn indep, std::string name)
    : state_(std::make_shared<const State>(std::move(ground), std::move(indep),
                                           std::move(name))) {}

Matroid::Matroid(std::shared_ptr<const State> state) : state_(std::move(state)) {}

const GroundSet& Matroid::ground() const { return state_->ground; }
int Matroid::size() const { return state_->ground.size(); }
const std::string& Matroid::name() const { return state_->name; }

const std::vector<std::uint8_t>* Matroid::Table() const {
  const State& s = *state_;
  if (s.table_ready.load(std::memory_order_acquire)) return &s.table;
  const int n = size();
  if (n > kMaxTableSize) return nullptr;
  std::call_once(s.table_once, [&] {
    const Word count = Word{1} << n;
    s.table.assign(count, 0);
    for (Word x = 0; x < count; ++x) s.table[x] = s.indep(SubsetMask(x)) ? 1 : 0;
    s.table_ready.store(true, std::memory_order_release);
  });
  return &s.table;
}

bool Matroid::IsIndependent(SubsetMask x) const {
  const State& s = *state_;
  if (s.table_ready.load(std::memory_order_acquire) || size() <= kAutoTableSize) {
    return (*Table())[x.bits()] != 0;
  }
  return s.indep(x);
}

int Matroid::Rank(SubsetMask x) const {
  SubsetMask basis;
  x.ForEach([&](int e) {
    if (IsIndependent(basis.With(e))) basis = basis.With(e);
  });
  return basis.size();
}

int Matroid::Rank() const {
  std::call_once(state_->rank_once, [&] { state_->rank = Rank(All()); });
  return state_->rank;
}

SubsetMask Matroid::Closure(SubsetMask x) const {
  const int r = Rank(x);
  SubsetMask out = x;
  x.Complement(size()).ForEach([&](int e) {
    if (Rank(x.With(e)) == r) out = out.With(e);
  });
  return out;
}

bool Matroid::IsCircuit(SubsetMask x) const {
  if (x.empty() || IsIndependent(x)) return false;
  bool minimal = true;
  x.ForEach([&](int e) { minimal = minimal && IsIndependent(x.Without(e)); });
  return minimal;
}

bool Matroid::IsCocircuit(SubsetMask x) const {
  if (x.empty()) return false;
  const int r = Rank();
  const SubsetMask rest = x.Complement(size());
  if (Rank(rest) == r) return false;
  bool minimal = true;
  x.ForEach([&](int e) { minimal = minimal && Rank(rest.With(e)) == r; });
  return minimal;
}

bool Matroid::IsBasis(SubsetMask x) const {
  return x.size() == Rank() && IsIndependent(x);
}

const CircuitFamily& Matroid::Circuits() const {
  const int n = size();
  if (n > EnumerationCap()) {
    throw EnumerationLimitError("circuit enumeration refused: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(EnumerationCap()));
  }
  std::call_once(state_->circuits_once, [&] {
    const auto& table = *Table();
    std::vector<SubsetMask> found;
    const Word count = Word{1} << n;
    for (Word x = 1; x < count; ++x) {
      if (table[x]) continue;
      bool minimal = true;
      for (Word w = x; w != 0 && minimal; w &= w - 1) {
        minimal = table[x & ~(w & (~w + 1))] != 0;
      }
      if (minimal) found.emplace_back(x);
    }
    state_->circuits = CircuitFamily(std::move(found));
  });
  return state_->circuits;
}

const CircuitFamily& Matroid::Cocircuits() const {
  const int n = size();
  if (n > EnumerationCap()) {
    throw EnumerationLimitError("cocircuit enumeration refused: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(EnumerationCap()));
  }
  std::call_once(state_->cocircuits_once, [&] {
    const int r = Rank();
    const Word count = Word{1} << n;
    std::vector<std::uint8_t> spanning(count);
    for (Word y = 0; y < count; ++y) spanning[y] = Rank(SubsetMask(y)) == r ? 1 : 0;
    const Word full = SubsetMask::Full(n).bits();
    std::vector<SubsetMask> found;
    for (Word x = 1; x < count; ++x) {
      const Word rest = full & ~x;
      if (spanning[rest]) continue;
      bool minimal = true;
      for (Word w = x; w != 0 && minimal; w &= w - 1) {
        minimal = spanning[rest | (w & (~w + 1))] != 0;
      }
      if (minimal) found.emplace_back(x);
    }
    state_->cocircuits = CircuitFamily(std::move(found));
  });
  return state_->cocircuits;
}

std::vector<SubsetMask> Matroid::Bases() const {
  const int n = size();
  if (n > EnumerationCap()) {
    throw EnumerationLimitError("basis enumeration refused: n = " + std::to_string(n));
  }
  const auto& table = *Table();
  const int r = Rank();
  std::vector<SubsetMask> out;
  const Word count = Word{1} << n;
  for (Word x = 0; x < count; ++x) {
    if (table[x] && std::popcount(x) == r) out.emplace_back(x);
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

Matroid Matroid::Dual() const {
  Matroid primal = *this;
  const std::string dual_name = name().empty() ? std::string() : "dual(" + name() + ")";
  return Matroid(
      ground(),
      [primal](SubsetMask x) {
        return primal.Rank(x.Complement(primal.size())) == primal.Rank();
      },
      dual_name);
}

Matroid Matroid::Renamed(std::string name) const {
  Matroid inner = *this;
  return Matroid(
      ground(), [inner](SubsetMask x) { return inner.IsIndependent(x); }, std::move(name));
}

Matroid FromCircuits(GroundSet ground, CircuitFamily circuits, std::string name) {
  return Matroid(
      std::move(ground),
      [family = std::move(circuits)](SubsetMask x) {
        for (SubsetMask c : family) {
          if (c.size() > x.size()) break;
          if (c.IsSubsetOf(x)) return false;
        }
        return true;
      },
      std::move(name));
}

Matroid Minor(const Matroid& m, SubsetMask remove, SubsetMask contract) {
  const SubsetMask all = m.All();
  if (remove.Intersects(contract)) {
    throw std::invalid_argument("minor: deletion and contraction sets overlap");
  }
  if (!remove.IsSubsetOf(all) || !contract.IsSubsetOf(all)) {
    throw std::invalid_argument("minor: sets must lie in the ground set");
  }
  const std::vector<int> kept = (all - remove - contract).Elements();
  if (kept.empty()) throw std::invalid_argument("minor: empty ground set");

  SubsetMask contract_basis;
  contract.ForEach([&](int e) {
    if (m.IsIndependent(contract_basis.With(e))) contract_basis = contract_basis.With(e);
  });

  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (int e : kept) labels.push_back(m.ground().label(e));

  std::string name;
  if (!m.name().empty()) {
    name = m.name() + "\\" + remove.ToString() + "/" + contract.ToString();
  }
  return Matroid(
      GroundSet(std::move(labels)),
      [m, kept, contract_basis](SubsetMask x) {
        SubsetMask lifted = contract_basis;
        x.ForEach([&](int j) { lifted = lifted.With(kept[j]); });
        return m.IsIndependent(lifted);
      },
      std::move(name));
}

Matroid Relabel(const Matroid& m, const ElementBijection& phi) {
  if (phi.size() != m.size()) throw std::invalid_argument("relabel: size mismatch");
  std::vector<std::string> labels(m.size());
  for (int e = 0; e < m.size(); ++e) labels[phi(e)] = m.ground().label(e);
  ElementBijection inverse = phi.Inverse();
  return Matroid(
      GroundSet(std::move(labels)),
      [m, inverse](SubsetMask x) { return m.IsIndependent(inverse.Apply(x)); }, m.name());
}

bool OrthogonalityHolds(SubsetMask circuit, SubsetMask cocircuit) {
  return (circuit & cocircuit).size() != 1;
}

AxiomReport ValidateCircuitAxioms(const CircuitFamily& family, int n) {
  AxiomReport report;
  const auto& sets = family.sets();
  const SubsetMask all = SubsetMask::Full(n);
  for (SubsetMask c : sets) {
    if (c.empty()) AddViolation(report, "non-empty", {c});
    if (!c.IsSubsetOf(all)) AddViolation(report, "ground-set", {c});
  }
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      // Canonical order puts smaller sets first, so only sets[a] ⊆ sets[b] can occur.
      if (sets[a].IsSubsetOf(sets[b])) AddViolation(report, "antichain", {sets[a], sets[b]});
    }
  }

  std::vector<std::uint8_t> holds_member;
  if (n <= kMaxTableSize) {
    holds_member.assign(Word{1} << n, 0);
    for (SubsetMask c : sets) holds_member[c.bits()] = 1;
    for (int e = 0; e < n; ++e) {
      const Word bit = Word{1} << e;
      for (Word x = 0; x < holds_member.size(); ++x) {
        if ((x & bit) && holds_member[x & ~bit]) holds_member[x] = 1;
      }
    }
  }
  auto contains_member = [&](SubsetMask x) {
    if (!holds_member.empty()) return holds_member[x.bits()] != 0;
    for (SubsetMask c : sets) {
      if (c.IsSubsetOf(x)) return true;
    }
    return false;
  };

  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const SubsetMask shared = sets[a] & sets[b];
      const SubsetMask joined = sets[a] | sets[b];
      shared.ForEach([&](int e) {
        if (!contains_member(joined.Without(e))) {
          AddViolation(report, "elimination", {sets[a], sets[b], SubsetMask::Singleton(e)});
        }
      });
    }
  }
  return report;
}

AxiomReport CheckIndependenceAxioms(const Matroid& m, std::uint64_t seed,
                                    int exhaustive_max_n, int samples) {
  AxiomReport report;
  const int n = m.size();
  if (!m.IsIndependent(SubsetMask())) AddViolation(report, "empty-independent", {SubsetMask()});

  if (n <= exhaustive_max_n && n <= kMaxTableSize) {
    std::vector<std::vector<SubsetMask>> by_size(n + 1);
    const Word count = Word{1} << n;
    for (Word x = 0; x < count; ++x) {
      const SubsetMask set(x);
      if (!m.IsIndependent(set)) continue;
      by_size[set.size()].push_back(set);
      set.ForEach([&](int e) {
        if (!m.IsIndependent(set.Without(e))) {
          AddViolation(report, "downward-closed", {set, set.Without(e)});
        }
      });
    }
    for (int k = 0; k < n; ++k) {
      for (SubsetMask small : by_size[k]) {
        for (SubsetMask large : by_size[k + 1]) {
          const SubsetMask extra = large - small;
          bool augmentable = false;
          for (Word w = extra.bits(); w != 0 && !augmentable; w &= w - 1) {
            augmentable = m.IsIndependent(small.With(std::countr_zero(w)));
          }
          if (!augmentable) AddViolation(report, "exchange", {small, large});
        }
      }
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  auto random_independent = [&] {
    std::vector<int> order(n);
    for (int e = 0; e < n; ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);
    SubsetMask set;
    const int target = static_cast<int>(rng() % (n + 1));
    for (int e : order) {
      if (set.size() >= target) break;
      if (m.IsIndependent(set.With(e))) set = set.With(e);
    }
    return set;
  };
  for (int trial = 0; trial < samples; ++trial) {
    const SubsetMask x = random_independent();
    const SubsetMask y = random_independent();
    x.ForEach([&](int e) {
      if (!m.IsIndependent(x.Without(e))) AddViolation(report, "downward-closed", {x, x.Without(e)});
    });
    const SubsetMask& large = x.size() > y.size() ? x : y;
    const SubsetMask& small = x.size() > y.size() ? y : x;
    if (large.size() == small.size()) continue;
    bool augmentable = false;
    (large - small).ForEach([&](int e) {
      augmentable = augmentable || m.IsIndependent(small.With(e));
    });
    if (!augmentable) AddViolation(report, "exchange", {small, large});
  }
  return report;
}

}  // namespace cyclicmat
