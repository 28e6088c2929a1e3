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


// Cyclic orderings of a ground set, nearly (s,t)-cyclic and (s,t)-cyclic
// certificates, ordering search, and window-level structural checks on
// (s,t)-cyclic orderings.
//
// Positions in an ordering are one-based and taken modulo n, so window(i, j)
// is {σ_i, σ_{i+1}, ..., σ_j}.

#ifndef CYCLICMAT_CYCLIC_H_
#define CYCLICMAT_CYCLIC_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclicmat/matroid.h"
#include "cyclicmat/report.h"
#include "cyclicmat/subset.h"

namespace cyclicmat {

// Circuit size s and cocircuit size t, both at least 2.
struct STParams {
  int s = 0;
  int t = 0;

  STParams() = default;
  // Throws std::invalid_argument unless s, t >= 2.
  STParams(int s_value, int t_value);
  std::string ToString() const;
};

// A cyclic sequence of the elements {0..n-1}.
class CyclicOrdering {
 public:
  // `order[p-1]` is the (zero-based) element at position p. Throws
  // std::invalid_argument unless `order` is a permutation of 0..n-1.
  explicit CyclicOrdering(std::vector<int> order);
  // (e_1, e_2, ..., e_n).
  static CyclicOrdering Natural(int n);
  // Reads one-based element indices.
  static CyclicOrdering FromOneBased(const std::vector<int>& one_based);

  int size() const { return static_cast<int>(order_.size()); }
  // Element at one-based position p, wrapping modulo n.
  int at(int p) const { return order_[WrapPosition(size(), p) - 1]; }
  const std::vector<int>& order() const { return order_; }
  std::vector<int> OneBased() const;

  // Elements at positions i, i+1, ..., j.
  SubsetMask Window(int i, int j) const;
  // The window of `length` positions starting at i; all of E once length >= n.
  SubsetMask WindowOfLength(int i, int length) const;

  // New position 1 holds the element at old position 1 + shift.
  CyclicOrdering Rotated(int shift) const;
  CyclicOrdering Reversed() const;
  // Lexicographically least sequence among all rotations of both directions.
  CyclicOrdering Canonical() const;
  bool EquivalentTo(const CyclicOrdering& other) const {
    return Canonical() == other.Canonical();
  }

  bool operator==(const CyclicOrdering&) const = default;

 private:
  std::vector<int> order_;
};

enum class OrderingKind { kNeither, kNearly, kFull };
const char* OrderingKindName(OrderingKind kind);

struct OrderingCertificate {
  OrderingKind kind = OrderingKind::kNeither;
  bool nearly = false;
  bool full = false;
  // Bit p-1 set when the s-window (t-window) starting at position p is a
  // circuit (cocircuit).
  SubsetMask circuit_starts;
  SubsetMask cocircuit_starts;
  // 1 when the circuit windows are exactly the odd starts, 0 when exactly the
  // even starts. Only set for full certificates with n > s + t - 2.
  std::optional<int> circuit_phase;
  std::optional<int> cocircuit_phase;
  // Failed window conditions, e.g. "s-1 window at 3 lies in no 4-circuit".
  std::vector<std::string> witnesses;
};

// Throws std::invalid_argument if n < max(s, t) - 1 or the sizes disagree.
OrderingCertificate Certify(const Matroid& m, const CyclicOrdering& sigma, STParams p);
bool IsNearlyCyclic(const Matroid& m, const CyclicOrdering& sigma, STParams p);
bool IsFullyCyclic(const Matroid& m, const CyclicOrdering& sigma, STParams p);

// Largest ground set accepted by FindOrderings. Defaults to 12; overridden by
// the CYCLICMAT_MAX_SEARCH_N environment variable.
int SearchCap();

enum class SearchMode { kNearly, kFull };

// Canonical representatives of every ordering class meeting `mode`, in
// lexicographic order, stopping after `limit` results when limit > 0.
// Throws EnumerationLimitError above SearchCap().
std::vector<CyclicOrdering> FindOrderings(const Matroid& m, STParams p, SearchMode mode,
                                          int limit = 0);

// Size constraints on n for nearly and fully (s,t)-cyclic orderings.
struct BoundReport {
  bool nearly_allowed = false;  // n >= s + t - 2
  bool full_allowed = false;    // additionally n even and s ≡ t (mod 2) when n > s + t - 2
  std::vector<std::string> binding;
};
BoundReport BoundPredicates(int n, STParams p, bool full);

// The remaining checks take an ordering that must certify as stated and throw
// std::invalid_argument otherwise.

// Requires a full ordering with n > s + t - 2. Each circuit window at i is
// flanked by cocircuit windows at i - t and i + s, and each cocircuit window at
// i by circuit windows at i - s and i + t.
VerificationReport CheckFlankingWindows(const Matroid& m, const CyclicOrdering& sigma,
                                        STParams p);

// Requires a full ordering with n > s + t - 2 and s ≡ t (mod 2). For every
// circuit window at i: when s is even, window(i, i+t-1) is a cocircuit,
// window(i+1, i+s) is independent and window(i+1, i+t) is coindependent; when
// s is odd, window(i+1, i+t) is a cocircuit, window(i+1, i+s) is independent
// and window(i, i+t-1) is coindependent.
VerificationReport CheckWindowStructure(const Matroid& m, const CyclicOrdering& sigma,
                                        STParams p);

// Requires a full ordering with n > s + t - 2 and s - 1 <= k <= n - t. Returns
// whether each of the two closure equivalences holds at (i, k):
//   σ_{i+k} ∈ cl(window(i, i+k-1))  iff  window(i+k-s+1, i+k) is a circuit;
//   σ_{i-1} ∈ cl(window(i, i+k-1))  iff  window(i-1, i+s-2) is a circuit.
std::pair<bool, bool> CheckWindowClosure(const Matroid& m, const CyclicOrdering& sigma,
                                         STParams p, int i, int k);
// CheckWindowClosure over every valid (i, k).
VerificationReport CheckWindowClosures(const Matroid& m, const CyclicOrdering& sigma,
                                       STParams p);

struct RankPrediction {
  int predicted = 0;
  int actual = 0;
  bool matches() const { return predicted == actual; }
};
// Requires a full ordering with n > s + t - 2 and 1 <= k <= n - t + 1.
// Predicts r(window(i, i+k-1)): k when k < s, otherwise floor((s+k-1)/2) when
// the s-window at i is a circuit and ceil((s+k-1)/2) when it is not.
RankPrediction PredictWindowRank(const Matroid& m, const CyclicOrdering& sigma, STParams p,
                                 int i, int k);
VerificationReport CheckWindowRanks(const Matroid& m, const CyclicOrdering& sigma,
                                    STParams p);

// Requires a full ordering. r(M) = (n + s - t) / 2 and r*(M) = (n - s + t) / 2.
VerificationReport CheckMatroidRank(const Matroid& m, const CyclicOrdering& sigma,
                                    STParams p);

// Requires a nearly ordering with n >= s + t whose odd-start s-windows are all
// circuits; checks that the ordering is full.
VerificationReport CheckOddCircuitsUpgrade(const Matroid& m, const CyclicOrdering& sigma,
                                           STParams p);

// Requires a nearly ordering with n >= s + 2t - 4. Every (s-1)-window lies in
// exactly one s-circuit.
VerificationReport CheckUniqueWindowCircuit(const Matroid& m, const CyclicOrdering& sigma,
                                            STParams p);

// True when n >= 3 t1 + t2 - 5 and n >= t1 + 2 t2 - 1 with t1 = min(s, t) and
// t2 = max(s, t).
bool UpgradeBoundsHold(int n, STParams p);

// Requires a nearly ordering and s, t >= 3. When UpgradeBoundsHold, checks the
// ordering is full; otherwise passes with a note.
VerificationReport CheckNearlyUpgrade(const Matroid& m, const CyclicOrdering& sigma,
                                      STParams p);

}  // namespace cyclicmat

#endif  // CYCLICMAT_CYCLIC_H_
