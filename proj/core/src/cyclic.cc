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


#include "cyclicmat/cyclic.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cyclicmat {
namespace {

std::string Pos(int p) { return std::to_string(p); }

SubsetMask ParityPositions(int n, int parity) {
  SubsetMask out;
  for (int p = 1; p <= n; ++p) {
    if (p % 2 == parity) out = out.With(p - 1);
  }
  return out;
}

void RequireSameSize(const Matroid& m, const CyclicOrdering& sigma) {
  if (m.size() != sigma.size()) {
    throw std::invalid_argument("ordering has " + std::to_string(sigma.size()) +
                                " elements but the matroid has " + std::to_string(m.size()));
  }
}

// True when the window of `length` positions at p is a circuit of that size.
bool CircuitWindow(const Matroid& m, const CyclicOrdering& sigma, int p, int length) {
  const SubsetMask w = sigma.WindowOfLength(p, length);
  return w.size() == length && m.IsCircuit(w);
}

bool CocircuitWindow(const Matroid& m, const CyclicOrdering& sigma, int p, int length) {
  const SubsetMask w = sigma.WindowOfLength(p, length);
  return w.size() == length && m.IsCocircuit(w);
}

bool IsCoindependent(const Matroid& m, SubsetMask x) {
  return m.Rank(x.Complement(m.size())) == m.Rank();
}

OrderingCertificate RequireFull(const Matroid& m, const CyclicOrdering& sigma, STParams p,
                                bool strict_size, const char* check) {
  OrderingCertificate cert = Certify(m, sigma, p);
  if (!cert.full) {
    throw std::invalid_argument(std::string(check) + ": ordering is not (s,t)-cyclic for " +
                                p.ToString());
  }
  if (strict_size && sigma.size() <= p.s + p.t - 2) {
    throw std::invalid_argument(std::string(check) + ": needs n > s + t - 2");
  }
  return cert;
}

OrderingCertificate RequireNearly(const Matroid& m, const CyclicOrdering& sigma, STParams p,
                                  const char* check) {
  OrderingCertificate cert = Certify(m, sigma, p);
  if (!cert.nearly) {
    throw std::invalid_argument(std::string(check) + ": ordering is not nearly (s,t)-cyclic for " +
                                p.ToString());
  }
  return cert;
}

std::string Subject(const Matroid& m, STParams p) { return m.name() + " " + p.ToString(); }

// Sets of size `size - 1` lying in some member of `family` of size `size`.
std::vector<bool> WindowCoverTable(const CircuitFamily& family, int n, int size) {
  std::vector<bool> table(std::size_t{1} << n, false);
  for (SubsetMask c : family.OfSize(size)) {
    c.ForEach([&](int e) { table[c.Without(e).bits()] = true; });
  }
  return table;
}

}  // namespace

STParams::STParams(int s_value, int t_value) : s(s_value), t(t_value) {
  if (s < 2 || t < 2) throw std::invalid_argument("s and t must both be at least 2");
}

std::string STParams::ToString() const {
  return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

CyclicOrdering::CyclicOrdering(std::vector<int> order) : order_(std::move(order)) {
  const int n = size();
  if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("ordering size out of range");
  std::vector<bool> seen(n, false);
  for (int e : order_) {
    if (e < 0 || e >= n || seen[e]) {
      throw std::invalid_argument("ordering is not a permutation of the ground set");
    }
    seen[e] = true;
  }
}

CyclicOrdering CyclicOrdering::Natural(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return CyclicOrdering(std::move(order));
}

CyclicOrdering CyclicOrdering::FromOneBased(const std::vector<int>& one_based) {
  std::vector<int> order;
  order.reserve(one_based.size());
  for (int e : one_based) order.push_back(e - 1);
  return CyclicOrdering(std::move(order));
}

std::vector<int> CyclicOrdering::OneBased() const {
  std::vector<int> out;
  out.reserve(order_.size());
  for (int e : order_) out.push_back(e + 1);
  return out;
}

SubsetMask CyclicOrdering::Window(int i, int j) const {
  const int n = size();
  const int length = (WrapPosition(n, j) - WrapPosition(n, i) + n) % n + 1;
  SubsetMask out;
  for (int k = 0; k < length; ++k) out = out.With(at(i + k));
  return out;
}

SubsetMask CyclicOrdering::WindowOfLength(int i, int length) const {
  if (length <= 0) return {};
  if (length >= size()) return SubsetMask::Full(size());
  return Window(i, i + length - 1);
}

CyclicOrdering CyclicOrdering::Rotated(int shift) const {
  std::vector<int> out(order_.size());
  for (int p = 1; p <= size(); ++p) out[p - 1] = at(p + shift);
  return CyclicOrdering(std::move(out));
}

CyclicOrdering CyclicOrdering::Reversed() const {
  return CyclicOrdering(std::vector<int>(order_.rbegin(), order_.rend()));
}

CyclicOrdering CyclicOrdering::Canonical() const {
  CyclicOrdering best = *this;
  for (const CyclicOrdering& base : {*this, Reversed()}) {
    for (int shift = 0; shift < size(); ++shift) {
      CyclicOrdering candidate = base.Rotated(shift);
      if (candidate.order_ < best.order_) best = std::move(candidate);
    }
  }
  return best;
}

const char* OrderingKindName(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::kFull:
      return "FULL";
    case OrderingKind::kNearly:
      return "NEARLY";
    case OrderingKind::kNeither:
      break;
  }
  return "NEITHER";
}

OrderingCertificate Certify(const Matroid& m, const CyclicOrdering& sigma, STParams p) {
  RequireSameSize(m, sigma);
  const int n = sigma.size();
  if (n < std::max(p.s, p.t) - 1) {
    throw std::invalid_argument("ordering needs at least max(s,t) - 1 elements");
  }
  OrderingCertificate cert;
  cert.nearly = true;
  for (int i = 1; i <= n; ++i) {
    const SubsetMask cw = sigma.WindowOfLength(i, p.s - 1);
    const SubsetMask kw = sigma.WindowOfLength(i, p.t - 1);
    bool in_circuit = false;
    cw.Complement(n).ForEach([&](int e) {
      in_circuit = in_circuit || m.IsCircuit(cw.With(e));
    });
    bool in_cocircuit = false;
    kw.Complement(n).ForEach([&](int e) {
      in_cocircuit = in_cocircuit || m.IsCocircuit(kw.With(e));
    });
    if (!in_circuit) {
      cert.nearly = false;
      cert.witnesses.push_back("(s-1)-window at " + Pos(i) + " lies in no " +
                               std::to_string(p.s) + "-circuit");
    }
    if (!in_cocircuit) {
      cert.nearly = false;
      cert.witnesses.push_back("(t-1)-window at " + Pos(i) + " lies in no " +
                               std::to_string(p.t) + "-cocircuit");
    }
    if (CircuitWindow(m, sigma, i, p.s)) cert.circuit_starts = cert.circuit_starts.With(i - 1);
    if (CocircuitWindow(m, sigma, i, p.t)) {
      cert.cocircuit_starts = cert.cocircuit_starts.With(i - 1);
    }
  }

  bool full = true;
  if (!cert.circuit_starts.contains(0) && !cert.circuit_starts.contains(1 % n)) {
    full = false;
    cert.witnesses.push_back("neither s-window at 1 nor at 2 is a circuit");
  }
  if (!cert.cocircuit_starts.contains(0) && !cert.cocircuit_starts.contains(1 % n)) {
    full = false;
    cert.witnesses.push_back("neither t-window at 1 nor at 2 is a cocircuit");
  }
  cert.circuit_starts.ForEach([&](int b) {
    if (!cert.circuit_starts.contains((b + 2) % n)) {
      full = false;
      cert.witnesses.push_back("circuit window at " + Pos(b + 1) + " but not at " +
                               Pos(WrapPosition(n, b + 3)));
    }
  });
  cert.cocircuit_starts.ForEach([&](int b) {
    if (!cert.cocircuit_starts.contains((b + 2) % n)) {
      full = false;
      cert.witnesses.push_back("cocircuit window at " + Pos(b + 1) + " but not at " +
                               Pos(WrapPosition(n, b + 3)));
    }
  });
  cert.full = full && cert.nearly;
  cert.kind = cert.full ? OrderingKind::kFull
                        : (cert.nearly ? OrderingKind::kNearly : OrderingKind::kNeither);

  if (cert.full && n > p.s + p.t - 2) {
    for (int parity : {1, 0}) {
      const SubsetMask starts = ParityPositions(n, parity);
      if (cert.circuit_starts == starts) cert.circuit_phase = parity;
      if (cert.cocircuit_starts == starts) cert.cocircuit_phase = parity;
    }
    if (!cert.circuit_phase || !cert.cocircuit_phase) {
      cert.witnesses.push_back("circuit or cocircuit windows do not form one parity class");
    }
  }
  return cert;
}

bool IsNearlyCyclic(const Matroid& m, const CyclicOrdering& sigma, STParams p) {
  return Certify(m, sigma, p).nearly;
}

bool IsFullyCyclic(const Matroid& m, const CyclicOrdering& sigma, STParams p) {
  return Certify(m, sigma, p).full;
}

int SearchCap() {
  static const int cap = [] {
    const char* env = std::getenv("CYCLICMAT_MAX_SEARCH_N");
    if (env == nullptr) return 12;
    return std::clamp(std::atoi(env), 1, kMaxTableSize);
  }();
  return cap;
}

std::vector<CyclicOrdering> FindOrderings(const Matroid& m, STParams p, SearchMode mode,
                                          int limit) {
  const int n = m.size();
  if (n > SearchCap()) {
    throw EnumerationLimitError("ordering search on " + std::to_string(n) +
                                " elements exceeds cap " + std::to_string(SearchCap()));
  }
  if (n < std::max(p.s, p.t) - 1) {
    throw std::invalid_argument("ordering needs at least max(s,t) - 1 elements");
  }
  const std::vector<bool> circuit_cover = WindowCoverTable(m.Circuits(), n, p.s);
  const std::vector<bool> cocircuit_cover = WindowCoverTable(m.Cocircuits(), n, p.t);

  std::vector<CyclicOrdering> found;
  std::vector<int> order(n, -1);
  order[0] = 0;
  // Window of `length` ending at zero-based index `last` without wrapping.
  auto tail = [&](int last, int length) {
    SubsetMask w;
    for (int k = last - length + 1; k <= last; ++k) w = w.With(order[k]);
    return w;
  };
  auto covered = [&](SubsetMask w, int length, const std::vector<bool>& table) {
    return length <= 0 || table[w.bits()];
  };

  auto extend = [&](auto&& self, int depth, SubsetMask used) -> bool {
    if (depth == n) {
      if (n >= 3 && order[1] > order[n - 1]) return true;
      CyclicOrdering sigma(order);
      for (int i = 1; i <= n; ++i) {
        if (!covered(sigma.WindowOfLength(i, p.s - 1), p.s - 1, circuit_cover) ||
            !covered(sigma.WindowOfLength(i, p.t - 1), p.t - 1, cocircuit_cover)) {
          return true;
        }
      }
      if (mode == SearchMode::kFull && !IsFullyCyclic(m, sigma, p)) return true;
      found.push_back(std::move(sigma));
      return limit <= 0 || static_cast<int>(found.size()) < limit;
    }
    for (int e = 1; e < n; ++e) {
      if (used.contains(e)) continue;
      order[depth] = e;
      if (depth + 1 >= p.s - 1 && !covered(tail(depth, p.s - 1), p.s - 1, circuit_cover)) {
        continue;
      }
      if (depth + 1 >= p.t - 1 && !covered(tail(depth, p.t - 1), p.t - 1, cocircuit_cover)) {
        continue;
      }
      if (!self(self, depth + 1, used.With(e))) return false;
    }
    order[depth] = -1;
    return true;
  };
  extend(extend, 1, SubsetMask::Singleton(0));
  return found;
}

BoundReport BoundPredicates(int n, STParams p, bool full) {
  BoundReport report;
  const int floor = p.s + p.t - 2;
  report.nearly_allowed = n >= floor;
  if (!report.nearly_allowed) {
    report.binding.push_back("n >= s + t - 2");
  }
  report.full_allowed = report.nearly_allowed;
  if (full && n > floor) {
    if (n % 2 != 0) {
      report.full_allowed = false;
      report.binding.push_back("n even");
    }
    if ((p.s - p.t) % 2 != 0) {
      report.full_allowed = false;
      report.binding.push_back("s ≡ t (mod 2)");
    }
  }
  return report;
}

VerificationReport CheckFlankingWindows(const Matroid& m, const CyclicOrdering& sigma,
                                        STParams p) {
  const OrderingCertificate cert = RequireFull(m, sigma, p, true, "flanking windows");
  const int n = sigma.size();
  VerificationReport report("flanking-windows", Subject(m, p));
  auto cocircuit_at = [&](int pos) { return cert.cocircuit_starts.contains(WrapPosition(n, pos) - 1); };
  auto circuit_at = [&](int pos) { return cert.circuit_starts.contains(WrapPosition(n, pos) - 1); };
  cert.circuit_starts.ForEach([&](int b) {
    const int i = b + 1;
    report.Expect(cocircuit_at(i - p.t) && cocircuit_at(i + p.s),
                  "circuit window at " + Pos(i) + " lacks a flanking cocircuit");
  });
  cert.cocircuit_starts.ForEach([&](int b) {
    const int i = b + 1;
    report.Expect(circuit_at(i - p.s) && circuit_at(i + p.t),
                  "cocircuit window at " + Pos(i) + " lacks a flanking circuit");
  });
  return report;
}

VerificationReport CheckWindowStructure(const Matroid& m, const CyclicOrdering& sigma,
                                        STParams p) {
  const OrderingCertificate cert = RequireFull(m, sigma, p, true, "window structure");
  if ((p.s - p.t) % 2 != 0) throw std::invalid_argument("window structure: needs s ≡ t (mod 2)");
  VerificationReport report("window-structure", Subject(m, p));
  const bool even = p.s % 2 == 0;
  cert.circuit_starts.ForEach([&](int b) {
    const int i = b + 1;
    const int cocircuit_start = even ? i : i + 1;
    const int coindependent_start = even ? i + 1 : i;
    report.Expect(CocircuitWindow(m, sigma, cocircuit_start, p.t),
                  "t-window at " + Pos(cocircuit_start) + " is not a cocircuit");
    report.Expect(m.IsIndependent(sigma.WindowOfLength(i + 1, p.s)),
                  "s-window at " + Pos(i + 1) + " is dependent");
    report.Expect(IsCoindependent(m, sigma.WindowOfLength(coindependent_start, p.t)),
                  "t-window at " + Pos(coindependent_start) + " is not coindependent");
  });
  return report;
}

std::pair<bool, bool> CheckWindowClosure(const Matroid& m, const CyclicOrdering& sigma,
                                         STParams p, int i, int k) {
  RequireFull(m, sigma, p, true, "window closure");
  const int n = sigma.size();
  if (k < p.s - 1 || k > n - p.t) {
    throw std::invalid_argument("window closure: needs s - 1 <= k <= n - t");
  }
  const SubsetMask closure = m.Closure(sigma.WindowOfLength(i, k));
  const bool forward = closure.contains(sigma.at(i + k)) ==
                       CircuitWindow(m, sigma, i + k - p.s + 1, p.s);
  const bool backward = closure.contains(sigma.at(i - 1)) ==
                        CircuitWindow(m, sigma, i - 1, p.s);
  return {forward, backward};
}

VerificationReport CheckWindowClosures(const Matroid& m, const CyclicOrdering& sigma,
                                       STParams p) {
  RequireFull(m, sigma, p, true, "window closure");
  const int n = sigma.size();
  VerificationReport report("window-closure", Subject(m, p));
  for (int i = 1; i <= n; ++i) {
    for (int k = p.s - 1; k <= n - p.t; ++k) {
      const auto [forward, backward] = CheckWindowClosure(m, sigma, p, i, k);
      report.Expect(forward, "forward closure at i=" + Pos(i) + ", k=" + Pos(k));
      report.Expect(backward, "backward closure at i=" + Pos(i) + ", k=" + Pos(k));
    }
  }
  return report;
}

RankPrediction PredictWindowRank(const Matroid& m, const CyclicOrdering& sigma, STParams p,
                                 int i, int k) {
  RequireFull(m, sigma, p, true, "window rank");
  const int n = sigma.size();
  if (k < 1 || k > n - p.t + 1) {
    throw std::invalid_argument("window rank: needs 1 <= k <= n - t + 1");
  }
  RankPrediction out;
  if (k < p.s) {
    out.predicted = k;
  } else if (CircuitWindow(m, sigma, i, p.s)) {
    out.predicted = (p.s + k - 1) / 2;
  } else {
    out.predicted = (p.s + k) / 2;
  }
  out.actual = m.Rank(sigma.WindowOfLength(i, k));
  return out;
}

VerificationReport CheckWindowRanks(const Matroid& m, const CyclicOrdering& sigma,
                                    STParams p) {
  RequireFull(m, sigma, p, true, "window rank");
  const int n = sigma.size();
  VerificationReport report("window-rank", Subject(m, p));
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n - p.t + 1; ++k) {
      const RankPrediction r = PredictWindowRank(m, sigma, p, i, k);
      report.Expect(r.matches(), "rank of window(" + Pos(i) + ", length " + Pos(k) +
                                     ") is " + Pos(r.actual) + ", predicted " +
                                     Pos(r.predicted));
    }
  }
  return report;
}

VerificationReport CheckMatroidRank(const Matroid& m, const CyclicOrdering& sigma, STParams p) {
  RequireFull(m, sigma, p, false, "matroid rank");
  const int n = sigma.size();
  VerificationReport report("matroid-rank", Subject(m, p));
  const int rank = m.Rank();
  report.Expect(2 * rank == n + p.s - p.t, "r(M) = " + Pos(rank));
  report.Expect(2 * (n - rank) == n - p.s + p.t, "r*(M) = " + Pos(n - rank));
  return report;
}

VerificationReport CheckOddCircuitsUpgrade(const Matroid& m, const CyclicOrdering& sigma,
                                           STParams p) {
  const OrderingCertificate cert = RequireNearly(m, sigma, p, "odd circuits upgrade");
  const int n = sigma.size();
  if (n < p.s + p.t) throw std::invalid_argument("odd circuits upgrade: needs n >= s + t");
  if (!ParityPositions(n, 1).IsSubsetOf(cert.circuit_starts)) {
    throw std::invalid_argument("odd circuits upgrade: some odd s-window is not a circuit");
  }
  VerificationReport report("odd-circuits-upgrade", Subject(m, p));
  report.Expect(cert.full, "nearly ordering with odd circuit windows is not full");
  return report;
}

VerificationReport CheckUniqueWindowCircuit(const Matroid& m, const CyclicOrdering& sigma,
                                            STParams p) {
  RequireNearly(m, sigma, p, "unique window circuit");
  const int n = sigma.size();
  if (n < p.s + 2 * p.t - 4) {
    throw std::invalid_argument("unique window circuit: needs n >= s + 2t - 4");
  }
  VerificationReport report("unique-window-circuit", Subject(m, p));
  for (int i = 1; i <= n; ++i) {
    const SubsetMask w = sigma.WindowOfLength(i, p.s - 1);
    int count = 0;
    w.Complement(n).ForEach([&](int e) { count += m.IsCircuit(w.With(e)) ? 1 : 0; });
    report.Expect(count == 1, "(s-1)-window at " + Pos(i) + " lies in " + Pos(count) +
                                  " s-circuits");
  }
  return report;
}

bool UpgradeBoundsHold(int n, STParams p) {
  const int t1 = std::min(p.s, p.t);
  const int t2 = std::max(p.s, p.t);
  return n >= 3 * t1 + t2 - 5 && n >= t1 + 2 * t2 - 1;
}

VerificationReport CheckNearlyUpgrade(const Matroid& m, const CyclicOrdering& sigma,
                                      STParams p) {
  if (p.s < 3 || p.t < 3) throw std::invalid_argument("nearly upgrade: needs s, t >= 3");
  const OrderingCertificate cert = RequireNearly(m, sigma, p, "nearly upgrade");
  VerificationReport report("nearly-upgrade", Subject(m, p));
  if (!UpgradeBoundsHold(sigma.size(), p)) {
    report.Note("size bounds not met; nothing to check");
    return report;
  }
  report.Expect(cert.full, "nearly ordering above the size bounds is not full");
  return report;
}

}  // namespace cyclicmat
