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


#include "cyclicmat/weakmap.h"

#include <stdexcept>

#include "cyclicmat/constructions.h"

namespace cyclicmat {
namespace {

void RequireSameSize(const Matroid& m1, const Matroid& m2) {
  if (m1.size() != m2.size()) {
    throw std::invalid_argument("ground sets differ in size: " + std::to_string(m1.size()) +
                                " vs " + std::to_string(m2.size()));
  }
}

}  // namespace

WeakMapReport IsWeakMap(const Matroid& m1, const Matroid& m2, const ElementBijection& phi) {
  RequireSameSize(m1, m2);
  if (phi.size() != m1.size()) throw std::invalid_argument("map size mismatch");
  WeakMapReport report;
  report.relation = "weak map " + m1.name() + " -> " + m2.name();
  for (SubsetMask c : m1.Circuits()) {
    if (m2.IsIndependent(phi.Apply(c))) {
      report.holds = false;
      report.violating = c;
      break;
    }
  }
  return report;
}

WeakMapReport IsWeakMapByIndependence(const Matroid& m1, const Matroid& m2,
                                      const ElementBijection& phi) {
  RequireSameSize(m1, m2);
  if (m1.size() > EnumerationCap()) {
    throw EnumerationLimitError("independence sweep exceeds the enumeration cap");
  }
  WeakMapReport report;
  report.relation = "weak map (independent sets) " + m1.name() + " -> " + m2.name();
  const ElementBijection inverse = phi.Inverse();
  const SubsetMask::Word count = SubsetMask::Word{1} << m1.size();
  for (SubsetMask::Word bits = 0; bits < count; ++bits) {
    const SubsetMask x(bits);
    if (m2.IsIndependent(x) && !m1.IsIndependent(inverse.Apply(x))) {
      report.holds = false;
      report.violating = x;
      break;
    }
  }
  return report;
}

WeakMapReport IsQuotient(const Matroid& m1, const Matroid& m2) {
  RequireSameSize(m1, m2);
  WeakMapReport report;
  report.relation = "quotient " + m1.name() + " -> " + m2.name();
  const CircuitFamily& small = m2.Circuits();
  for (SubsetMask c : m1.Circuits()) {
    SubsetMask covered;
    for (SubsetMask d : small) {
      if (d.IsSubsetOf(c)) covered |= d;
    }
    if (covered != c) {
      report.holds = false;
      report.violating = c;
      break;
    }
  }
  return report;
}

bool IsQuotientByFlats(const Matroid& m1, const Matroid& m2) {
  RequireSameSize(m1, m2);
  if (m1.size() > EnumerationCap()) {
    throw EnumerationLimitError("flat sweep exceeds the enumeration cap");
  }
  const SubsetMask::Word count = SubsetMask::Word{1} << m1.size();
  for (SubsetMask::Word bits = 0; bits < count; ++bits) {
    const SubsetMask x(bits);
    if (m2.Closure(x) == x && m1.Closure(x) != x) return false;
  }
  return true;
}

DominationResult CheckIntervalRankDomination(const Matroid& target,
                                             const MultiPathPresentation& p) {
  if (target.size() != p.n()) throw std::invalid_argument("ground sets differ in size");
  if (!p.base().Uncovered().empty()) {
    throw std::invalid_argument("presentation leaves " + p.base().Uncovered().ToString() +
                                " uncovered; its transversal matroid has loops");
  }
  const Matroid& dual = p.DualMatroid();
  DominationResult result;
  result.condition = true;
  for (int i = 1; i <= p.m() && result.condition; ++i) {
    for (int k = 1; k <= p.m(); ++k) {
      const SubsetMask u = p.NeighborsOfRange(i, (i - 1 + k - 1) % p.m() + 1);
      const int lhs = target.Rank(u);
      const int rhs = dual.Rank(u);
      if (lhs > rhs) {
        result.condition = false;
        result.witness = std::to_string(k) + " intervals from " + std::to_string(i) +
                         ", union " + u.ToString() + ": rank " + std::to_string(lhs) + " > " +
                         std::to_string(rhs);
        break;
      }
    }
  }
  if (result.condition) {
    result.weak_map = IsWeakMap(dual, target, ElementBijection::Identity(p.n()));
  }
  return result;
}

Matroid TruncatedFreeCyclic(int n, int s, int t) {
  if (s < 2 || t < s) throw std::invalid_argument("needs t >= s >= 2");
  if ((t - s) % 2 != 0) throw std::invalid_argument("needs s ≡ t (mod 2)");
  if (n % 2 != 0 || n < s + t - 2) throw std::invalid_argument("needs even n >= s + t - 2");
  const int steps = (t - s) / 2;
  const Matroid psi = FreeCyclic(n, s);
  if (steps == 0) return psi;
  return Truncate(psi, steps);
}

OrderingCertificate CheckTruncationCyclic(int n, int s, int t) {
  const Matroid m = TruncatedFreeCyclic(n, s, t);
  return Certify(m, CyclicOrdering::Natural(n), STParams(s, t));
}

ImageReport CheckWeakMapImage(const Matroid& m, const CyclicOrdering& sigma, STParams p) {
  const OrderingCertificate cert = Certify(m, sigma, p);
  const int n = sigma.size();
  if (!cert.full) throw std::invalid_argument("weak-map image: ordering is not (s,t)-cyclic");
  if (n < p.s + p.t - 1) throw std::invalid_argument("weak-map image: needs n >= s + t - 1");
  if (p.t < p.s) throw std::invalid_argument("weak-map image: needs t >= s");

  ImageReport out;
  out.rotation = cert.circuit_starts.contains(0) ? 0 : 1;
  const CyclicOrdering aligned = sigma.Rotated(out.rotation);
  for (int pos = 1; pos <= n; ++pos) out.map.push_back(aligned.at(pos));
  const Matroid source = TruncatedFreeCyclic(n, p.s, p.t);
  out.weak_map = IsWeakMap(source, m, ElementBijection(out.map));
  if (out.rotation != 0) out.weak_map.notes.push_back("ordering rotated by one position");
  return out;
}

}  // namespace cyclicmat
