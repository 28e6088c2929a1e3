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

#ifndef CYCLICMAT_SUBSET_H_
#define CYCLICMAT_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cyclicmat {

// Largest ground set a SubsetMask can describe.
inline constexpr int kMaxGroundSize = 64;

// A subset of a ground set {e_1, ..., e_n}, stored as a bit indicator.
//
// Element e_k occupies bit k-1, so all element arguments of this class are
// zero-based. Printing uses the one-based names e_1, e_2, ...
class SubsetMask {
 public:
  using Word = std::uint64_t;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(Word bits) : bits_(bits) {}

  static constexpr SubsetMask Singleton(int e) { return SubsetMask(Word{1} << e); }
  static constexpr SubsetMask Full(int n) {
    return SubsetMask(n >= kMaxGroundSize ? ~Word{0} : (Word{1} << n) - 1);
  }
  static SubsetMask Of(std::initializer_list<int> zero_based);
  static SubsetMask OfOneBased(std::span<const int> one_based);
  static SubsetMask OfOneBased(std::initializer_list<int> one_based);

  constexpr Word bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool IsSubsetOf(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(SubsetMask other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Smallest element; undefined on the empty set.
  constexpr int First() const { return std::countr_zero(bits_); }

  constexpr SubsetMask With(int e) const { return SubsetMask(bits_ | (Word{1} << e)); }
  constexpr SubsetMask Without(int e) const {
    return SubsetMask(bits_ & ~(Word{1} << e));
  }
  constexpr SubsetMask Complement(int n) const {
    return SubsetMask(~bits_ & Full(n).bits_);
  }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }
  constexpr SubsetMask operator^(SubsetMask o) const { return SubsetMask(bits_ ^ o.bits_); }
  SubsetMask& operator|=(SubsetMask o) { bits_ |= o.bits_; return *this; }
  SubsetMask& operator&=(SubsetMask o) { bits_ &= o.bits_; return *this; }
  SubsetMask& operator-=(SubsetMask o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const SubsetMask&) const = default;

  // Calls f(e) for every element in increasing order.
  template <typename F>
  void ForEach(F&& f) const {
    for (Word w = bits_; w != 0; w &= w - 1) f(std::countr_zero(w));
  }

  std::vector<int> Elements() const;          // zero-based, ascending
  std::vector<int> OneBasedElements() const;  // one-based, ascending
  std::string ToString() const;               // "{e1,e3}"

 private:
  Word bits_ = 0;
};

// Canonical order on subsets: by cardinality, then lexicographically on the
// ascending element lists.
bool CanonicalLess(SubsetMask a, SubsetMask b);

// Reduces a one-based position into [1, n].
constexpr int WrapPosition(int n, int p) { return ((p - 1) % n + n) % n + 1; }

// {e_i, e_{i+1}, ..., e_j} in the natural cyclic order of e_1..e_n, with
// one-based i, j taken modulo n; wraps past e_n when i > j.
SubsetMask CyclicRange(int n, int i, int j);

struct SubsetMaskHash {
  std::size_t operator()(SubsetMask s) const noexcept {
    return std::hash<SubsetMask::Word>{}(s.bits());
  }
};

// The ordered element names e_1..e_n.
class GroundSet {
 public:
  // Labels default to "e1".."en".
  explicit GroundSet(int n);
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_[e]; }
  SubsetMask All() const { return SubsetMask::Full(size()); }

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

// A bijection of {0..n-1}; image()[e] is the image of element e.
class ElementBijection {
 public:
  // Throws std::invalid_argument unless `image` is a permutation.
  explicit ElementBijection(std::vector<int> image);
  static ElementBijection Identity(int n);
  // e_i -> e_{i+shift} with indices taken modulo n.
  static ElementBijection Rotation(int n, int shift);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int e) const { return image_[e]; }
  SubsetMask Apply(SubsetMask x) const;
  ElementBijection Inverse() const;
  // (this ∘ first): apply `first`, then this map.
  ElementBijection After(const ElementBijection& first) const;
  const std::vector<int>& image() const { return image_; }

  bool operator==(const ElementBijection&) const = default;

 private:
  std::vector<int> image_;
};

}  // namespace cyclicmat

#endif  // CYCLICMAT_SUBSET_H_
