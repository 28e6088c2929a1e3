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


#include "cyclicmat/counterexample.h"

#include <algorithm>
#include <stdexcept>

#include "cyclicmat/matroid.h"
#include "cyclicmat/transversal.h"

namespace cyclicmat {
namespace {

struct Step {
  DerivationRule rule;
  SubsetMask parent1;
  SubsetMask parent2;
  int eliminated;  // one-based position
};

class Derivation {
 public:
  Derivation(int n, int s) : n_(n), s_(s) {}

  SubsetMask Range(int a, int b) const { return CyclicRange(n_, a, b); }
  int Wrap(int p) const { return WrapPosition(n_, p); }
  SubsetMask WithPos(SubsetMask x, int p) const { return x.With(Wrap(p) - 1); }
  SubsetMask Augmented(int i, int k, int l, int x) const {
    return WithPos(MakeTwoBlockSet({n_, s_, Wrap(i), k, l}).set, x);
  }

  // Parents for C_{i,k,l} ∪ {e_x} with k+l >= s.
  Step Derive(int i, int k, int l, int x) const {
    const int s = s_;
    if (k + l == s) {
      const int y = Wrap(x) == Wrap(i + k) ? i + k + 1 : i + k;
      return {DerivationRule::kAdjacentWindows, Range(i, i + s - 1), Range(i + 2, i + s + 1),
              Wrap(y)};
    }
    if (k == s - 1) {
      return {DerivationRule::kLongFirstBlock, Augmented(i + 2, k - 1, l, x),
              Range(i, i + s - 1), Wrap(i + s - 1)};
    }
    if (l == s - 1) {
      return {DerivationRule::kLongSecondBlock, Augmented(i, k, l - 1, x),
              Range(i + 2 * k, i + 2 * k + s - 1), Wrap(i + 2 * k)};
    }
    if (k == 3 && l == 3) {
      if (Wrap(x) == Wrap(i + 3)) {
        return {DerivationRule::kThreeThree, Augmented(i + 2, 2, 3, i + 4), Range(i, i + 4),
                Wrap(i + 4)};
      }
      const int other = Wrap(x) == Wrap(i + 4) ? i + 5 : i + 4;
      return {DerivationRule::kThreeThree, Augmented(i, 3, 2, i + 4), Range(i + 4, i + 8),
              Wrap(other)};
    }
    if (k >= 4) return ShiftLeft(i, k, l, x);
    if (l >= 4) return Mirrored(i, k, l, x);
    throw std::logic_error("no derivation rule for " + TwoBlockSpec{n_, s, i, k, l}.ToString());
  }

 private:
  Step ShiftLeft(int i, int k, int l, int x) const {
    const int s = s_;
    const int last = i + 2 * k + l - s + 1;
    if (Wrap(x) != Wrap(last)) {
      if (l == s - 2 && Wrap(x) == Wrap(last - 1)) {
        return {DerivationRule::kShiftLeft, Range(last - 1, i + 2 * k + 2 * l - s + 1),
                Augmented(i, k, l - 1, x), Wrap(last)};
      }
      return {DerivationRule::kShiftLeft, Augmented(i + 2, k - 2, l + 1, x),
              Augmented(i, k, l - 1, x), Wrap(last)};
    }
    return {DerivationRule::kShiftLeft, Augmented(i, k, l - 1, i + k),
            Augmented(i + 2, k - 2, l + 1, i + k), Wrap(i + k)};
  }

  // The reflection p -> s-1-p maps odd s-windows to odd s-windows and
  // C_{i,k,l} to C_{i',l,k} with i' = 2s-2-i-2k-2l.
  int Reflect(int p) const { return Wrap(s_ - 1 - p); }
  SubsetMask Reflect(SubsetMask x) const {
    SubsetMask out;
    x.ForEach([&](int e) { out = out.With(Reflect(e + 1) - 1); });
    return out;
  }
  Step Mirrored(int i, int k, int l, int x) const {
    const Step inner = ShiftLeft(Wrap(2 * s_ - 2 - i - 2 * k - 2 * l), l, k, Reflect(x));
    return {DerivationRule::kMirrored, Reflect(inner.parent1), Reflect(inner.parent2),
            Reflect(inner.eliminated)};
  }

  int n_;
  int s_;
};

std::string Range1(int a, int b) {
  return "σ(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

std::string TwoBlockSpec::ToString() const {
  return "C(i=" + std::to_string(i) + ",k=" + std::to_string(k) + ",l=" + std::to_string(l) +
         ";n=" + std::to_string(n) + ",s=" + std::to_string(s) + ")";
}

void RequireCounterexampleParameters(int n, int s) {
  if (s < 4) throw std::invalid_argument("two-block sets need s >= 4");
  if (n % 2 != 0 || n < 4 * s - 8) {
    throw std::invalid_argument("two-block sets need even n >= 4s - 8 (got n=" +
                                std::to_string(n) + ", s=" + std::to_string(s) + ")");
  }
  if (n > kMaxGroundSize) throw std::invalid_argument("ground set too large");
}

void ValidateTwoBlockSpec(const TwoBlockSpec& spec) {
  RequireCounterexampleParameters(spec.n, spec.s);
  const int s = spec.s;
  if (spec.i < 1 || spec.i > spec.n || spec.i % 2 == 0) {
    throw std::invalid_argument("two-block start must be an odd position: " + spec.ToString());
  }
  if (spec.k < 2 || spec.k > s - 1 || spec.l < 2 || spec.l > s - 1 ||
      spec.k + spec.l < s - 1 || spec.k + spec.l > 2 * s - 4) {
    throw std::invalid_argument("two-block lengths out of range: " + spec.ToString());
  }
}

TwoBlockSet MakeTwoBlockSet(const TwoBlockSpec& spec) {
  ValidateTwoBlockSpec(spec);
  const int n = spec.n;
  const int s = spec.s;
  const int i = spec.i;
  const int k = spec.k;
  const int l = spec.l;
  TwoBlockSet out;
  out.set = CyclicRange(n, i, i + k - 1) |
            CyclicRange(n, i + 2 * k + l - s + 2, i + 2 * k + 2 * l - s + 1);
  out.gap = CyclicRange(n, i + k, i + 2 * k + l - s + 1);
  out.allowed = out.gap;
  if (k == s - 1) out.allowed = out.allowed.Without(WrapPosition(n, i + k) - 1);
  if (l == s - 1) out.allowed = out.allowed.Without(WrapPosition(n, i + 2 * k + l - s + 1) - 1);
  return out;
}

std::vector<TwoBlockSpec> AllTwoBlockSpecs(int n, int s) {
  RequireCounterexampleParameters(n, s);
  std::vector<TwoBlockSpec> out;
  for (int sum = s - 1; sum <= 2 * s - 4; ++sum) {
    for (int i = 1; i <= n; i += 2) {
      for (int k = 2; k <= s - 1; ++k) {
        const int l = sum - k;
        if (l >= 2 && l <= s - 1) out.push_back({n, s, i, k, l});
      }
    }
  }
  return out;
}

VerificationReport CheckTwoBlockCircuits(int n, int s) {
  RequireCounterexampleParameters(n, s);
  VerificationReport report("two-block-circuits",
                            "psi(" + std::to_string(n) + "," + std::to_string(s) + ")");
  const Matroid psi = FreeCyclic(n, s);
  for (const TwoBlockSpec& spec : AllTwoBlockSpecs(n, s)) {
    const TwoBlockSet block = MakeTwoBlockSet(spec);
    block.allowed.ForEach([&](int x) {
      const SubsetMask c = block.set.With(x);
      report.Expect(psi.IsCircuit(c),
                    spec.ToString() + " with x=e" + std::to_string(x + 1) + ": " +
                        c.ToString() + " is not a circuit");
    });
  }
  return report;
}

const char* DerivationRuleName(DerivationRule rule) {
  switch (rule) {
    case DerivationRule::kOddWindow:
      return "odd-window";
    case DerivationRule::kAdjacentWindows:
      return "adjacent-windows";
    case DerivationRule::kLongFirstBlock:
      return "long-first-block";
    case DerivationRule::kLongSecondBlock:
      return "long-second-block";
    case DerivationRule::kThreeThree:
      return "three-three";
    case DerivationRule::kShiftLeft:
      return "shift-left";
    case DerivationRule::kMirrored:
      return "mirrored";
  }
  return "unknown";
}

const ForcedCircuit* ForcedCircuitLedger::Find(SubsetMask set) const {
  const auto it = index_.find(set);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

ForcedCircuitLedger DeriveForcedCircuits(int n, int s) {
  RequireCounterexampleParameters(n, s);
  const Matroid psi = FreeCyclic(n, s);
  const Derivation derivation(n, s);
  ForcedCircuitLedger ledger;
  ledger.n_ = n;
  ledger.s_ = s;
  auto record = [&](ForcedCircuit entry) {
    entry.psi_circuit = psi.IsCircuit(entry.set);
    ledger.index_.emplace(entry.set, ledger.entries_.size());
    ledger.entries_.push_back(std::move(entry));
  };

  for (int i = 1; i <= n; i += 2) {
    ForcedCircuit window;
    window.set = CyclicRange(n, i, i + s - 1);
    window.rule = DerivationRule::kOddWindow;
    record(window);
  }

  for (const TwoBlockSpec& spec : AllTwoBlockSpecs(n, s)) {
    const TwoBlockSet block = MakeTwoBlockSet(spec);
    block.allowed.ForEach([&](int e) {
      const int x = e + 1;
      const SubsetMask target = block.set.With(e);
      if (spec.k + spec.l == s - 1) {
        if (!ledger.Contains(target)) {
          throw std::logic_error(spec.ToString() + " is not an odd window");
        }
        return;
      }
      const Step step = derivation.Derive(spec.i, spec.k, spec.l, x);
      const std::string where = spec.ToString() + " x=e" + std::to_string(x);
      if (!ledger.Contains(step.parent1) || !ledger.Contains(step.parent2)) {
        throw std::logic_error(where + ": parent not yet derived (" +
                               step.parent1.ToString() + ", " + step.parent2.ToString() + ")");
      }
      const int el = step.eliminated - 1;
      if (step.parent1 == step.parent2 || !step.parent1.contains(el) ||
          !step.parent2.contains(el) ||
          !((step.parent1 | step.parent2).Without(el)).IsSubsetOf(target)) {
        throw std::logic_error(where + ": elimination does not land in the target");
      }
      ForcedCircuit entry;
      entry.set = target;
      entry.rule = step.rule;
      entry.spec = spec;
      entry.x = x;
      entry.parent1 = step.parent1;
      entry.parent2 = step.parent2;
      entry.eliminated = step.eliminated;
      record(entry);
    });
  }
  return ledger;
}

std::string RankStep::ToString() const {
  std::string out = "r(" + set.ToString() + ") <= " + std::to_string(bound);
  if (added != 0) {
    out += witness.empty() ? " (adds e" + std::to_string(added) + ")"
                           : " (e" + std::to_string(added) + " in closure via " +
                                 witness.ToString() + ")";
  }
  return out;
}

RankBoundCertificate CertifyRankBound(const ForcedCircuitLedger& ledger) {
  const int n = ledger.n();
  const int s = ledger.s();
  RankBoundCertificate cert;
  cert.n = n;
  cert.s = s;
  cert.assumed_rank = n / 2 + 1;

  RankStep base;
  base.set = CyclicRange(n, 1, s);
  base.bound = s - 1;
  base.witness = base.set;
  base.verified = ledger.Contains(base.set);
  cert.chain.push_back(base);

  for (int u = 1; u <= n / 2 - s + 1; ++u) {
    const RankStep& prev = cert.chain.back();
    RankStep grow;
    grow.set = CyclicRange(n, 1, s + 2 * u - 1);
    grow.bound = prev.bound + 1;
    grow.added = s + 2 * u - 1;
    grow.verified = grow.set == prev.set.With(grow.added - 1);
    cert.chain.push_back(grow);

    RankStep close;
    close.set = CyclicRange(n, 1, s + 2 * u);
    close.bound = grow.bound;
    close.added = s + 2 * u;
    close.witness = CyclicRange(n, 2 * u + 1, 2 * u + s);
    close.verified = close.set == grow.set.With(close.added - 1) &&
                     ledger.Contains(close.witness) &&
                     close.witness.contains(close.added - 1) &&
                     close.witness.IsSubsetOf(close.set);
    cert.chain.push_back(close);
  }

  const RankStep& top = cert.chain.back();
  const int i = n - 2 * s + 5;
  const TwoBlockSet block = MakeTwoBlockSet({n, s, i, s - 2, s - 2});
  for (int x = n - s + 3; x <= n; ++x) {
    RankStep step;
    step.set = top.set;
    step.bound = top.bound;
    step.added = x;
    step.witness = block.set.With(x - 1);
    step.verified = block.allowed.contains(x - 1) && ledger.Contains(step.witness) &&
                    step.witness.Without(x - 1).IsSubsetOf(top.set);
    cert.spanning.push_back(step);
  }

  SubsetMask spanned = top.set;
  for (const RankStep& step : cert.spanning) spanned = spanned.With(step.added - 1);
  cert.rank_bound = top.bound;
  cert.verified = spanned == SubsetMask::Full(n) && top.set == CyclicRange(n, 1, n - s + 2) &&
                  std::all_of(cert.chain.begin(), cert.chain.end(),
                              [](const RankStep& st) { return st.verified; }) &&
                  std::all_of(cert.spanning.begin(), cert.spanning.end(),
                              [](const RankStep& st) { return st.verified; });
  return cert;
}

std::vector<std::string> RankBoundCertificate::Lines() const {
  std::vector<std::string> out;
  for (const RankStep& step : chain) out.push_back(step.ToString());
  const std::string top = Range1(1, n - s + 2);
  for (const RankStep& step : spanning) {
    out.push_back("e" + std::to_string(step.added) + " in cl(" + top + ") via " +
                  step.witness.ToString());
  }
  out.push_back(top + " spans M', so r(M') <= " + std::to_string(rank_bound));
  out.push_back(std::to_string(rank_bound) + " < " + std::to_string(assumed_rank) + " = r(M')" +
                (contradiction() ? ": contradiction" : ": no contradiction"));
  return out;
}

}  // namespace cyclicmat
