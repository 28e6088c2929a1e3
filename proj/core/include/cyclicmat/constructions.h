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


// Named matroid families: uniform matroids, wheels, whirls, free spikes and
// truncations.

#ifndef CYCLICMAT_CONSTRUCTIONS_H_
#define CYCLICMAT_CONSTRUCTIONS_H_

#include <vector>

#include "cyclicmat/matroid.h"
#include "cyclicmat/subset.h"

namespace cyclicmat {

// U_{r,n}: X independent iff |X| <= r. Requires 0 <= r <= n.
Matroid Uniform(int r, int n);

// Graphic matroid of the wheel with r spokes, r >= 2. Element e_{2i-1} is
// spoke i and e_{2i} is the rim edge joining rim vertices i and i+1, so the
// triangles are {e_{2i-1}, e_{2i}, e_{2i+1}}.
Matroid Wheel(int r);

// The even-labelled elements of Wheel(r).
SubsetMask WheelRim(int r);

// Wheel(r) with its rim circuit relaxed to a basis, r >= 2. Same labelling.
Matroid Whirl(int r);

// Pairs L_1..L_r partitioning E.
struct PairPartition {
  std::vector<SubsetMask> pairs;
};

// L_i = {e_{2i-1}, e_{2i}}.
PairPartition SpikePairs(int r);

// Rank-r free spike without tip on 2r elements, r >= 3, with
// r(X) = min(r, |X| - max(0, p(X) - 1)) where p(X) counts the pairs inside X.
// When 2r <= EnumerationCap() the result is validated on construction: circuit
// axioms, every L_i ∪ L_j a circuit and a cocircuit, and the natural ordering
// nearly (4,4)-cyclic. Throws std::logic_error if validation fails.
Matroid FreeSpike(int r);

// T^i(M): X independent iff independent in M and |X| <= r(M) - i.
// Requires 0 <= i <= r(M).
Matroid Truncate(const Matroid& m, int i);

}  // namespace cyclicmat

#endif  // CYCLICMAT_CONSTRUCTIONS_H_
