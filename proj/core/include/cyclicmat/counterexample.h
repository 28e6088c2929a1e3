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


// Two-block sets in the natural ordering of FreeCyclic(n, s), the circuits they
// force in any matroid whose odd-start s-windows are circuits and which has
// FreeCyclic(n, s) as a quotient, and the resulting rank bound.
//
// Positions are one-based and equal to element indices, since the ordering is
// (e_1, ..., e_n).

#ifndef CYCLICMAT_COUNTEREXAMPLE_H_
#define CYCLICMAT_COUNTEREXAMPLE_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "cyclicmat/report.h"
#include "cyclicmat/subset.h"

namespace cyclicmat {

// Parameters of one two-block set: odd start i, block lengths k and l with
// 2 <= k, l <= s-1 and s-1 <= k+l <= 2s-4, on n >= 4s-8 elements (n even, s >= 4).
struct TwoBlockSpec {
  int n = 0;
  int s = 0;
  int i = 0;
  int k = 0;
  int l = 0;

  std::string ToString() const;
};

// Throws std::invalid_argument unless the parameters are in range.
void ValidateTwoBlockSpec(const TwoBlockSpec& spec);

struct TwoBlockSet {
  // window(i, i+k-1) ∪ window(i+2k+l-s+2, i+2k+2l-s+1).
  SubsetMask set;
  // window(i+k, i+2k+l-s+1), the k+l-s+2 positions between the blocks.
  SubsetMask gap;
  // The gap minus e_{i+k} when k = s-1 and minus its last element when l = s-1.
  SubsetMask allowed;
};

TwoBlockSet MakeTwoBlockSet(const TwoBlockSpec& spec);

// Every valid spec for (n, s), ordered by k+l, then i, k, l.
std::vector<TwoBlockSpec> AllTwoBlockSpecs(int n, int s);

// Throws std::invalid_argument unless s >= 4, n is even and n >= 4s - 8.
void RequireCounterexampleParameters(int n, int s);

// Every two-block set plus an allowed gap element is a circuit of FreeCyclic(n, s).
VerificationReport CheckTwoBlockCircuits(int n, int s);

enum class DerivationRule {
  kOddWindow,          // given: an odd-start s-window
  kAdjacentWindows,    // k+l = s, two odd windows two apart
  kLongFirstBlock,     // k = s-1
  kLongSecondBlock,    // l = s-1
  kThreeThree,         // k = l = 3
  kShiftLeft,          // k >= 4 via C_{i+2,k-2,l+1} or an odd window
  kMirrored,           // l >= 4, the previous rule under reflection
};
const char* DerivationRuleName(DerivationRule rule);

struct ForcedCircuit {
  SubsetMask set;
  DerivationRule rule = DerivationRule::kOddWindow;
  // All zero for odd windows.
  TwoBlockSpec spec;
  int x = 0;  // one-based gap position, 0 for odd windows
  // Elimination of `eliminated` between two earlier entries; empty for odd windows.
  SubsetMask parent1;
  SubsetMask parent2;
  int eliminated = 0;  // one-based, 0 for odd windows
  // Whether the set is a circuit of FreeCyclic(n, s).
  bool psi_circuit = false;
};

// The replayed induction. Every entry after the odd windows is justified by
// an elimination whose parents are earlier entries, so each set is dependent
// in any matroid whose odd s-windows are circuits; being a circuit of
// FreeCyclic(n, s) as well, it is a circuit of any such matroid having
// FreeCyclic(n, s) as a quotient.
class ForcedCircuitLedger {
 public:
  int n() const { return n_; }
  int s() const { return s_; }
  const std::vector<ForcedCircuit>& entries() const { return entries_; }
  // Earliest entry with this set, or nullptr.
  const ForcedCircuit* Find(SubsetMask set) const;
  bool Contains(SubsetMask set) const { return Find(set) != nullptr; }

 private:
  friend ForcedCircuitLedger DeriveForcedCircuits(int n, int s);
  int n_ = 0;
  int s_ = 0;
  std::vector<ForcedCircuit> entries_;
  std::unordered_map<SubsetMask, std::size_t, SubsetMaskHash> index_;
};

// Throws std::logic_error if a step lacks a recorded parent or its
// elimination does not land inside the target.
ForcedCircuitLedger DeriveForcedCircuits(int n, int s);

struct RankStep {
  // The set whose rank is bounded, usually window(1, j).
  SubsetMask set;
  int bound = 0;
  // Element added to the previous set, 0 for the first step.
  int added = 0;
  // Ledger circuit putting `added` in the closure of the previous set; empty
  // when the bound simply grows by one.
  SubsetMask witness;
  bool verified = false;
  std::string ToString() const;
};

struct RankBoundCertificate {
  int n = 0;
  int s = 0;
  // r(window(1, j)) bounds for j = s, s+1, ..., n-s+2.
  std::vector<RankStep> chain;
  // Circuits C ∪ {x} showing each x beyond n-s+2 lies in the closure of
  // window(1, n-s+2).
  std::vector<RankStep> spanning;
  int rank_bound = 0;     // the bound on r(M') the chain yields
  int assumed_rank = 0;   // n/2 + 1
  bool verified = false;  // every step checks out
  bool contradiction() const { return verified && rank_bound < assumed_rank; }
  std::vector<std::string> Lines() const;
};

RankBoundCertificate CertifyRankBound(const ForcedCircuitLedger& ledger);

}  // namespace cyclicmat

#endif  // CYCLICMAT_COUNTEREXAMPLE_H_
