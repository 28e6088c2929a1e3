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


#include "cyclicmat/suite.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "cyclicmat/constructions.h"
#include "cyclicmat/counterexample.h"
#include "cyclicmat/cyclic.h"
#include "cyclicmat/matroid.h"
#include "cyclicmat/report.h"
#include "cyclicmat/transversal.h"
#include "cyclicmat/weakmap.h"
#include "json.hpp"

namespace cyclicmat {
namespace {

using Word = SubsetMask::Word;

std::string Str(int v) { return std::to_string(v); }

// SplitMix64; fixed output on every platform.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  int Below(int bound) { return static_cast<int>(Next() % static_cast<std::uint64_t>(bound)); }

 private:
  std::uint64_t state_;
};

std::vector<int> RandomPermutation(int n, SplitMix& rng) {
  std::vector<int> perm(n);
  for (int e = 0; e < n; ++e) perm[e] = e;
  for (int e = n - 1; e > 0; --e) std::swap(perm[e], perm[rng.Below(e + 1)]);
  return perm;
}

struct Task {
  std::string family;
  std::string instance;
  std::string check;
  std::function<VerificationReport()> run;
};

class TaskList {
 public:
  explicit TaskList(std::uint64_t seed) : seed_(seed) {}

  void Add(const std::string& family, const std::string& instance, const std::string& check,
           std::function<VerificationReport()> run) {
    tasks_.push_back({family, instance, check, std::move(run)});
  }
  // A seed unique to the next task, derived from the suite seed alone.
  std::uint64_t NextSeed() const { return seed_ * 1000003ULL + tasks_.size(); }
  std::vector<Task>& tasks() { return tasks_; }

 private:
  std::uint64_t seed_;
  std::vector<Task> tasks_;
};

VerificationReport FromAxioms(const AxiomReport& axioms, const std::string& check) {
  VerificationReport report(check, "");
  report.checked = 1;
  for (const AxiomViolation& v : axioms.violations) {
    std::string witness = v.axiom + ":";
    for (SubsetMask w : v.witnesses) witness += " " + w.ToString();
    report.Fail(witness);
  }
  return report;
}

VerificationReport FromWeakMap(const WeakMapReport& r, bool expect_holds) {
  VerificationReport report("weak-map", "");
  std::string witness = r.relation + (r.holds ? " holds" : " fails");
  if (r.violating) witness += " at " + r.violating->ToString();
  report.Expect(r.holds == expect_holds, witness);
  for (const std::string& note : r.notes) report.Note(note);
  return report;
}

VerificationReport ExpectKind(const Matroid& m, const CyclicOrdering& sigma, STParams p,
                              OrderingKind expected) {
  const OrderingCertificate cert = Certify(m, sigma, p);
  VerificationReport report("ordering-certificate", "");
  std::string witness = std::string("certificate is ") + OrderingKindName(cert.kind) +
                        ", expected " + OrderingKindName(expected);
  for (const std::string& w : cert.witnesses) witness += "; " + w;
  const bool ok = expected == OrderingKind::kNearly ? cert.nearly : cert.kind == expected;
  report.Expect(ok, witness);
  report.Note(std::string("kind ") + OrderingKindName(cert.kind));
  return report;
}

// Checks every matroid fixture gets.
void AddAxiomChecks(TaskList& list, const std::string& family, const std::string& instance,
                    const Matroid& m) {
  list.Add(family, instance, "circuit-axioms", [m] {
    return FromAxioms(ValidateCircuitAxioms(m.Circuits(), m.size()), "circuit-axioms");
  });
  const std::uint64_t seed = list.NextSeed();
  list.Add(family, instance, "independence-axioms", [m, seed] {
    return FromAxioms(CheckIndependenceAxioms(m, seed), "independence-axioms");
  });
  list.Add(family, instance, "orthogonality", [m] {
    VerificationReport report("orthogonality", "");
    for (SubsetMask c : m.Circuits()) {
      for (SubsetMask d : m.Cocircuits()) {
        report.Expect(OrthogonalityHolds(c, d),
                      "circuit " + c.ToString() + " meets cocircuit " + d.ToString() + " once");
      }
    }
    return report;
  });
  list.Add(family, instance, "cocircuits-are-dual-circuits", [m] {
    VerificationReport report("cocircuits-are-dual-circuits", "");
    report.Expect(m.Cocircuits() == m.Dual().Circuits(),
                  "cocircuit family differs from the circuits of the dual");
    report.Expect(m.Rank() + m.Dual().Rank() == m.size(), "r(M) + r(M*) != |E|");
    return report;
  });
}

// The window properties of an ordering declared (s,t)-cyclic.
void AddFullOrderingChecks(TaskList& list, const std::string& family,
                           const std::string& instance, const Matroid& m,
                           const CyclicOrdering& sigma, STParams p) {
  const int n = sigma.size();
  list.Add(family, instance, "ordering-certificate",
           [=] { return ExpectKind(m, sigma, p, OrderingKind::kFull); });
  list.Add(family, instance, "size-bounds", [=] {
    VerificationReport report("size-bounds", "");
    const BoundReport bounds = BoundPredicates(n, p, true);
    std::string binding;
    for (const std::string& b : bounds.binding) binding += " " + b;
    report.Expect(bounds.nearly_allowed && bounds.full_allowed,
                  "full ordering violates size or parity bound:" + binding);
    return report;
  });
  list.Add(family, instance, "reversal", [=] {
    VerificationReport report("reversal", "");
    report.Expect(IsFullyCyclic(m, sigma.Reversed(), p), "reversed ordering is not full");
    return report;
  });
  list.Add(family, instance, "dual-ordering", [=] {
    VerificationReport report("dual-ordering", "");
    report.Expect(IsFullyCyclic(m.Dual(), sigma, STParams(p.t, p.s)),
                  "ordering is not (t,s)-cyclic in the dual");
    return report;
  });
  list.Add(family, instance, "matroid-rank", [=] { return CheckMatroidRank(m, sigma, p); });
  if (n > p.s + p.t - 2) {
    list.Add(family, instance, "flanking-windows",
             [=] { return CheckFlankingWindows(m, sigma, p); });
    list.Add(family, instance, "window-structure",
             [=] { return CheckWindowStructure(m, sigma, p); });
    list.Add(family, instance, "window-closure",
             [=] { return CheckWindowClosures(m, sigma, p); });
    list.Add(family, instance, "window-rank", [=] { return CheckWindowRanks(m, sigma, p); });
  }
  if (n >= p.s + p.t) {
    list.Add(family, instance, "odd-circuits-upgrade", [=] {
      const OrderingCertificate cert = Certify(m, sigma, p);
      const CyclicOrdering aligned =
          cert.circuit_phase.value_or(1) == 1 ? sigma : sigma.Rotated(1);
      return CheckOddCircuitsUpgrade(m, aligned, p);
    });
  }
  if (n >= p.s + 2 * p.t - 4) {
    list.Add(family, instance, "unique-window-circuit",
             [=] { return CheckUniqueWindowCircuit(m, sigma, p); });
  }
  if (p.s >= 3 && p.t >= 3) {
    list.Add(family, instance, "nearly-upgrade", [=] { return CheckNearlyUpgrade(m, sigma, p); });
  }
}

VerificationReport Domination(const Matroid& target, const MultiPathPresentation& pres) {
  VerificationReport report("interval-rank-domination", "");
  const DominationResult result = CheckIntervalRankDomination(target, pres);
  report.Expect(result.consistent(), "rank condition holds but the identity is not a weak map");
  report.Note(std::string("condition ") + (result.condition ? "holds" : "fails") +
              (result.witness.empty() ? "" : ": " + result.witness));
  return report;
}

void AddPsiFamily(TaskList& list, const SuiteOptions& options) {
  const std::string family = "psi";
  for (int n = 6; n <= options.max_n; n += 2) {
    for (int s = 3; s <= std::min(6, (n + 2) / 2); ++s) {
      const std::string instance = "psi(" + Str(n) + "," + Str(s) + ")";
      const auto pres = std::make_shared<const MultiPathPresentation>(
          MultiPathPresentation::FreeCyclic(n, s));
      const Matroid psi = pres->DualMatroid().Renamed(instance);
      list.Add(family, instance, "dual-rank", [pres] { return CheckDualRank(*pres); });
      list.Add(family, instance, "deficiency-circuits",
               [pres] { return CheckDeficiencyCircuits(*pres); });
      list.Add(family, instance, "circuit-classification",
               [pres] { return CheckCircuitClassification(*pres); });
      list.Add(family, instance, "self-duality", [n, s] { return CheckSelfDuality(n, s); });
      list.Add(family, instance, "window-basis-characterization",
               [n, s] { return CheckWindowBasisCharacterization(n, s); });
      list.Add(family, instance, "dual-oracle", [pres, psi, n] {
        VerificationReport report("dual-oracle", "");
        const Matroid composed = TransversalMatroid(pres->base()).Dual();
        for (Word x = 0; x < (Word{1} << n); ++x) {
          const SubsetMask set(x);
          report.Expect(psi.IsIndependent(set) == composed.IsIndependent(set),
                        "oracles disagree on " + set.ToString());
        }
        return report;
      });
      AddAxiomChecks(list, family, instance, psi);
      AddFullOrderingChecks(list, family, instance, psi, CyclicOrdering::Natural(n),
                            STParams(s, s));
      const std::vector<Matroid> targets = {psi, Truncate(psi, 1), Uniform(n / 2, n),
                                            Uniform(n / 2 - 1, n)};
      for (const Matroid& target : targets) {
        list.Add(family, instance + " -> " + target.name(), "interval-rank-domination",
                 [target, pres] { return Domination(target, *pres); });
      }
    }
  }
}

void AddTruncationFamily(TaskList& list, const SuiteOptions& options) {
  const std::string family = "truncation";
  for (int n = 6; n <= options.max_n; n += 2) {
    for (int s = 3; s <= 5; ++s) {
      for (int t = s + 2; t <= s + 4 && n >= s + t - 2; t += 2) {
        const int i = (t - s) / 2;
        const Matroid psi = FreeCyclic(n, s);
        const Matroid m = TruncatedFreeCyclic(n, s, t);
        const STParams p(s, t);
        const CyclicOrdering sigma = CyclicOrdering::Natural(n);
        const std::string instance = m.name() + " " + p.ToString();
        list.Add(family, instance, "truncation-cyclic", [n, s, t] {
          VerificationReport report("truncation-cyclic", "");
          const OrderingCertificate cert = CheckTruncationCyclic(n, s, t);
          report.Expect(cert.full, std::string("certificate is ") + OrderingKindName(cert.kind));
          return report;
        });
        list.Add(family, instance, "truncation-independence", [psi, m, n, i] {
          VerificationReport report("truncation-independence", "");
          const int cap = psi.Rank() - i;
          for (Word x = 0; x < (Word{1} << n); ++x) {
            const SubsetMask set(x);
            const bool expected = psi.IsIndependent(set) && set.size() <= cap;
            report.Expect(m.IsIndependent(set) == expected,
                          "independence differs from the size cap on " + set.ToString());
            report.Expect(m.Rank(set) == std::min(psi.Rank(set), cap),
                          "rank differs from min(r, cap) on " + set.ToString());
          }
          return report;
        });
        list.Add(family, instance, "quotient", [psi, m] {
          VerificationReport report("quotient", "");
          const WeakMapReport by_circuits = IsQuotient(psi, m);
          const bool by_flats = IsQuotientByFlats(psi, m);
          report.Expect(by_circuits.holds, "a circuit is not a union of truncation circuits");
          report.Expect(by_flats, "a flat of the truncation is not a flat of the original");
          return report;
        });
        list.Add(family, instance, "weak-map", [psi, m, n] {
          VerificationReport report = FromWeakMap(IsWeakMap(psi, m, ElementBijection::Identity(n)), true);
          report.Merge(FromWeakMap(
              IsWeakMapByIndependence(psi, m, ElementBijection::Identity(n)), true));
          return report;
        });
        AddAxiomChecks(list, family, instance, m);
        AddFullOrderingChecks(list, family, instance, m, sigma, p);
        if (n >= s + t - 1) {
          list.Add(family, instance, "weak-map-image", [m, sigma, p] {
            VerificationReport report("weak-map-image", "");
            const ImageReport image = CheckWeakMapImage(m, sigma, p);
            report.Expect(image.weak_map.holds, "not a weak-map image of the truncated psi");
            return report;
          });
        }
      }
    }
  }
}

void AddUniformFamily(TaskList& list, const SuiteOptions& options) {
  const std::string family = "uniform";
  for (int s = 3; s <= options.max_n; ++s) {
    for (int t = 3; s + t - 2 <= options.max_n; ++t) {
      const int n = s + t - 2;
      const Matroid m = Uniform(s - 1, n);
      const STParams p(s, t);
      const std::string instance = m.name() + " " + p.ToString();
      AddAxiomChecks(list, family, instance, m);
      list.Add(family, instance, "matroid-rank",
               [=] { return CheckMatroidRank(m, CyclicOrdering::Natural(n), p); });
      const std::uint64_t seed = list.NextSeed();
      list.Add(family, instance, "every-ordering-full", [=] {
        VerificationReport report("every-ordering-full", "");
        SplitMix rng(seed);
        for (int trial = 0; trial < 8; ++trial) {
          const CyclicOrdering sigma(trial == 0 ? CyclicOrdering::Natural(n).order()
                                                : RandomPermutation(n, rng));
          report.Expect(IsFullyCyclic(m, sigma, p), "ordering is not full");
        }
        return report;
      });
      if (s >= 3 && n >= 3) {
        list.Add(family, instance, "quotient", [m, n, s] {
          VerificationReport report("quotient", "");
          const Matroid lower = Uniform(s - 2, n);
          report.Expect(IsQuotient(m, lower).holds, "lower uniform is not a quotient");
          report.Expect(IsQuotientByFlats(m, lower), "flats route disagrees");
          report.Expect(!IsQuotient(lower, m).holds, "higher uniform is a quotient of the lower");
          return report;
        });
      }
    }
  }
  if (options.max_n >= 4) {
    list.Add(family, "U(1,4) -> U(2,4)", "weak-map", [] {
      return FromWeakMap(IsWeakMap(Uniform(1, 4), Uniform(2, 4), ElementBijection::Identity(4)),
                         false);
    });
  }
}

void AddImageCheck(TaskList& list, const std::string& family, const std::string& instance,
                   const Matroid& m, STParams p) {
  if (m.size() < p.s + p.t - 1) return;
  list.Add(family, instance, "weak-map-image", [=] {
    VerificationReport report("weak-map-image", "");
    const CyclicOrdering sigma = CyclicOrdering::Natural(m.size());
    const OrderingCertificate cert = Certify(m, sigma, p);
    if (!cert.full) {
      report.Expect(!UpgradeBoundsHold(m.size(), p), "nearly ordering above the bounds");
      report.Note("ordering is not full; image not applicable");
      return report;
    }
    const ImageReport image = CheckWeakMapImage(m, sigma, p);
    report.Expect(image.weak_map.holds, "not a weak-map image of the truncated psi");
    report.Note("rotation " + Str(image.rotation));
    return report;
  });
}

void AddConstructionsFamily(TaskList& list, const SuiteOptions& options) {
  const std::string family = "constructions";
  for (int r = 3; 2 * r <= options.max_n; ++r) {
    const Matroid wheel = Wheel(r);
    const Matroid whirl = Whirl(r);
    const Matroid spike = FreeSpike(r);
    const CyclicOrdering sigma = CyclicOrdering::Natural(2 * r);
    const STParams three(3, 3);
    const STParams four(4, 4);
    for (const Matroid& m : {wheel, whirl, spike}) AddAxiomChecks(list, family, m.name(), m);
    list.Add(family, wheel.name(), "ordering-certificate",
             [=] { return ExpectKind(wheel, sigma, three, OrderingKind::kNearly); });
    list.Add(family, spike.name(), "ordering-certificate",
             [=] { return ExpectKind(spike, sigma, four, OrderingKind::kNearly); });
    if (r >= 4) {
      AddFullOrderingChecks(list, family, wheel.name() + " " + three.ToString(), wheel, sigma,
                            three);
    }
    AddFullOrderingChecks(list, family, whirl.name() + " " + three.ToString(), whirl, sigma,
                          three);
    list.Add(family, spike.name(), "nearly-upgrade",
             [=] { return CheckNearlyUpgrade(spike, sigma, four); });
    AddImageCheck(list, family, wheel.name(), wheel, three);
    AddImageCheck(list, family, whirl.name(), whirl, three);
    AddImageCheck(list, family, spike.name(), spike, four);
    list.Add(family, whirl.name() + " -> " + wheel.name(), "weak-map", [=] {
      return FromWeakMap(IsWeakMap(whirl, wheel, ElementBijection::Identity(2 * r)), true);
    });
    list.Add(family, wheel.name() + " -> " + whirl.name(), "weak-map", [=] {
      return FromWeakMap(IsWeakMap(wheel, whirl, ElementBijection::Identity(2 * r)), false);
    });
    list.Add(family, whirl.name(), "whirl-is-psi", [=] {
      VerificationReport report("whirl-is-psi", "");
      report.Expect(whirl.Circuits() == FreeCyclic(2 * r, 3).Circuits(),
                    "whirl circuits differ from psi(" + Str(2 * r) + ",3)");
      return report;
    });
  }
}

// Every nearly (3,3)-cyclic ordering found by exhaustive search, checked
// against the nearly-to-full upgrade.
VerificationReport SearchAndUpgrade(const Matroid& m, STParams p) {
  VerificationReport report("nearly-orderings-upgrade", "");
  const std::vector<CyclicOrdering> found = FindOrderings(m, p, SearchMode::kNearly);
  int not_full = 0;
  for (const CyclicOrdering& sigma : found) {
    if (!IsFullyCyclic(m, sigma, p)) ++not_full;
    report.Merge(CheckNearlyUpgrade(m, sigma, p));
  }
  report.notes.clear();
  report.check = "nearly-orderings-upgrade";
  report.Note(Str(static_cast<int>(found.size())) + " nearly classes, " + Str(not_full) +
              " not full");
  return report;
}

// Odd indices draw arbitrary neighborhoods; even indices draw cyclic
// intervals, which are far more likely to admit nearly cyclic orderings.
Matroid RandomTransversal(int n, SplitMix& rng, int index) {
  const int m = 2 + rng.Below(4);
  std::vector<SubsetMask> nbhds;
  for (int i = 0; i < m; ++i) {
    if (index % 2 == 0) {
      const int start = 1 + rng.Below(n);
      nbhds.push_back(CyclicRange(n, start, start + 1 + rng.Below(4)));
      continue;
    }
    Word bits = 0;
    while (bits == 0) bits = rng.Next() & SubsetMask::Full(n).bits();
    nbhds.emplace_back(bits);
  }
  return TransversalMatroid(BipartitePresentation(n, std::move(nbhds)),
                            "random-transversal#" + Str(index));
}

void AddOrderingsFamily(TaskList& list, const SuiteOptions& options) {
  const std::string family = "orderings";
  const STParams three(3, 3);
  if (options.max_n >= 8) {
    for (const Matroid& m : {FreeCyclic(8, 3), Wheel(4), Whirl(4)}) {
      list.Add(family, m.name(), "nearly-orderings-upgrade",
               [=] { return SearchAndUpgrade(m, three); });
    }
    SplitMix rng(options.seed);
    for (int k = 1; k <= 3; ++k) {
      const ElementBijection phi(RandomPermutation(8, rng));
      const Matroid relabeled = Relabel(Wheel(4), phi).Renamed("wheel(4)#" + Str(k));
      list.Add(family, relabeled.name(), "nearly-orderings-upgrade", [=] {
        VerificationReport report = SearchAndUpgrade(relabeled, three);
        const std::size_t base = FindOrderings(Wheel(4), three, SearchMode::kNearly).size();
        report.Expect(FindOrderings(relabeled, three, SearchMode::kNearly).size() == base,
                      "relabeling changed the number of nearly classes");
        return report;
      });
    }
    for (int k = 1; k <= 20; ++k) {
      const Matroid m = RandomTransversal(8, rng, k);
      list.Add(family, m.name(), "nearly-orderings-upgrade",
               [=] { return SearchAndUpgrade(m, three); });
    }
  }
  if (options.max_n >= 6) {
    // Below the size bounds: informational only.
    for (const Matroid& m : {Whirl(3), Wheel(3), Uniform(2, 4)}) {
      list.Add(family, m.name(), "bound-tightness", [=] {
        VerificationReport report = SearchAndUpgrade(m, three);
        report.check = "bound-tightness";
        return report;
      });
    }
  }
}

void AddCounterexampleFamily(TaskList& list, const SuiteOptions& options) {
  const std::string family = "counterexample";
  for (int s = 4; 4 * s - 8 <= options.max_n; ++s) {
    for (int n = std::max(4 * s - 8, 2 * s); n <= options.max_n; n += 2) {
      if (n % 2 != 0) continue;
      const std::string instance = "(" + Str(n) + "," + Str(s) + ")";
      list.Add(family, instance, "two-block-circuits", [n, s] { return CheckTwoBlockCircuits(n, s); });
      list.Add(family, instance, "forced-circuit-ledger", [n, s] {
        VerificationReport report("forced-circuit-ledger", "");
        const ForcedCircuitLedger ledger = DeriveForcedCircuits(n, s);
        for (const TwoBlockSpec& spec : AllTwoBlockSpecs(n, s)) {
          const TwoBlockSet block = MakeTwoBlockSet(spec);
          block.allowed.ForEach([&](int e) {
            report.Expect(ledger.Contains(block.set.With(e)),
                          spec.ToString() + " x=e" + Str(e + 1) + " is not forced");
          });
        }
        for (const ForcedCircuit& entry : ledger.entries()) {
          report.Expect(entry.psi_circuit, entry.set.ToString() + " is not a psi circuit");
        }
        report.Note(Str(static_cast<int>(ledger.entries().size())) + " ledger entries");
        return report;
      });
      list.Add(family, instance, "rank-bound-contradiction", [n, s] {
        VerificationReport report("rank-bound-contradiction", "");
        const RankBoundCertificate cert = CertifyRankBound(DeriveForcedCircuits(n, s));
        report.Expect(cert.verified, "a step of the rank chain does not check out");
        report.Expect(cert.contradiction(), "rank bound " + Str(cert.rank_bound) +
                                                " does not contradict rank " +
                                                Str(cert.assumed_rank));
        const std::vector<std::string> lines = cert.Lines();
        if (!lines.empty()) report.Note(lines.back());
        return report;
      });
    }
  }
}

void AddMutant(TaskList& list) {
  list.Add("mutant", "psi(8,3) minus one circuit", "circuit-axioms", [] {
    std::vector<SubsetMask> sets = FreeCyclic(8, 3).Circuits().sets();
    sets.erase(sets.begin());
    return FromAxioms(ValidateCircuitAxioms(CircuitFamily(std::move(sets)), 8), "circuit-axioms");
  });
}

SuiteEntry RunTask(const Task& task) {
  SuiteEntry entry;
  entry.family = task.family;
  entry.instance = task.instance;
  entry.check = task.check;
  const auto start = std::chrono::steady_clock::now();
  try {
    const VerificationReport report = task.run();
    entry.ok = report.ok;
    entry.checked = report.checked;
    entry.failure_count = report.failure_count;
    entry.failures = report.failures;
    entry.notes = report.notes;
  } catch (const std::exception& e) {
    entry.ok = false;
    entry.failure_count = 1;
    entry.failures = {std::string("error: ") + e.what()};
  }
  entry.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return entry;
}

}  // namespace

int SuiteResult::passed() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.ok; }));
}

int SuiteResult::failed() const { return static_cast<int>(entries.size()) - passed(); }

const SuiteEntry* SuiteResult::FirstFailure() const {
  for (const SuiteEntry& e : entries) {
    if (!e.ok) return &e;
  }
  return nullptr;
}

const std::vector<std::string>& SuiteFamilies() {
  static const std::vector<std::string> kFamilies = {
      "psi", "truncation", "uniform", "constructions", "orderings", "counterexample"};
  return kFamilies;
}

SuiteResult RunSuite(const SuiteOptions& options) {
  if (options.max_n < 4 || options.max_n > kMaxTableSize) {
    throw std::invalid_argument("max-n must lie in [4, " + Str(kMaxTableSize) + "]");
  }
  std::vector<std::string> families = options.families;
  if (families.empty()) families = SuiteFamilies();
  TaskList list(options.seed);
  for (const std::string& f : families) {
    if (f == "psi") {
      AddPsiFamily(list, options);
    } else if (f == "truncation") {
      AddTruncationFamily(list, options);
    } else if (f == "uniform") {
      AddUniformFamily(list, options);
    } else if (f == "constructions") {
      AddConstructionsFamily(list, options);
    } else if (f == "orderings") {
      AddOrderingsFamily(list, options);
    } else if (f == "counterexample") {
      AddCounterexampleFamily(list, options);
    } else {
      throw std::invalid_argument("unknown suite family \"" + f + "\"");
    }
  }
  if (options.inject_mutant) AddMutant(list);

  const std::vector<Task>& tasks = list.tasks();
  SuiteResult result;
  result.entries.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      result.entries[k] = RunTask(tasks[k]);
    }
  };
  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, 64);
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::sort(result.entries.begin(), result.entries.end(),
            [](const SuiteEntry& a, const SuiteEntry& b) {
              return std::tie(a.family, a.instance, a.check) <
                     std::tie(b.family, b.instance, b.check);
            });
  return result;
}

std::string SuiteToJson(const SuiteResult& result, const SuiteOptions& options) {
  using Json = nlohmann::json;
  Json entries = Json::array();
  for (const SuiteEntry& e : result.entries) {
    Json j = {{"check", e.check},       {"family", e.family},
              {"instance", e.instance}, {"ok", e.ok},
              {"checked", e.checked},   {"failure_count", e.failure_count},
              {"failures", e.failures}, {"notes", e.notes}};
    if (options.timings) j["seconds"] = e.seconds;
    entries.push_back(std::move(j));
  }
  Json summary = {{"total", result.entries.size()},
                  {"passed", result.passed()},
                  {"failed", result.failed()},
                  {"ok", result.ok()}};
  if (const SuiteEntry* first = result.FirstFailure()) {
    summary["first_failure"] = {
        {"check", first->check},
        {"family", first->family},
        {"instance", first->instance},
        {"witness", first->failures.empty() ? std::string() : first->failures.front()}};
  }
  std::vector<std::string> families = options.families;
  if (families.empty()) families = SuiteFamilies();
  Json report = {{"seed", options.seed},   {"max_n", options.max_n},
                 {"families", families},   {"mutant", options.inject_mutant},
                 {"summary", summary},     {"entries", entries}};
  return report.dump(2) + "\n";
}

}  // namespace cyclicmat
