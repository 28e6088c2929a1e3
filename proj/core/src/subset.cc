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

#include "cyclicmat/subset.h"

#include <set>
#include <stdexcept>
#include <utility>

namespace cyclicmat {

SubsetMask SubsetMask::Of(std::initializer_list<int> zero_based) {
  SubsetMask s;
  for (int e : zero_based) s = s.With(e);
  return s;
}

SubsetMask SubsetMask::OfOneBased(std::span<const int> one_based) {
  SubsetMask s;
  for (int e : one_based) {
    if (e < 1 || e > kMaxGroundSize) {
      throw std::invalid_argument("element index out of range: " + std::to_string(e));
    }
    s = s.With(e - 1);
  }
  return s;
}

SubsetMask SubsetMask::OfOneBased(std::initializer_list<int> one_based) {
  return OfOneBased(std::span<const int>(one_based.begin(), one_based.size()));
}

std::vector<int> SubsetMask::Elements() const {
  std::vector<int> out;
  out.reserve(size());
  ForEach([&](int e) { out.push_back(e); });
  return out;
}

std::vector<int> SubsetMask::OneBasedElements() const {
  std::vector<int> out;
  out.reserve(size());
  ForEach([&](int e) { out.push_back(e + 1); });
  return out;
}

std::string SubsetMask::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](int e) {
    if (!first) out += ",";
    first = false;
    out += "e" + std::to_string(e + 1);
  });
  return out + "}";
}

bool CanonicalLess(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // Below the smallest differing element both lists agree, so the set holding
  // that element is the lexicographically smaller one.
  return a.contains((a ^ b).First());
}

SubsetMask CyclicRange(int n, int i, int j) {
  const int first = WrapPosition(n, i);
  const int length = (WrapPosition(n, j) - first + n) % n + 1;
  SubsetMask out;
  for (int k = 0; k < length; ++k) out = out.With((first - 1 + k) % n);
  return out;
}

GroundSet::GroundSet(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size must be in [1, 64], got " +
                                std::to_string(n));
  }
  labels_.reserve(n);
  for (int i = 1; i <= n; ++i) labels_.push_back("e" + std::to_string(i));
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || static_cast<int>(labels_.size()) > kMaxGroundSize) {
    throw std::invalid_argument("ground set size must be in [1, 64]");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw std::invalid_argument("ground set labels must be distinct");
  }
}

ElementBijection::ElementBijection(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || hit[v]) {
      throw std::invalid_argument("element map is not a bijection");
    }
    hit[v] = true;
  }
}

ElementBijection ElementBijection::Identity(int n) {
  std::vector<int> image(n);
  for (int e = 0; e < n; ++e) image[e] = e;
  return ElementBijection(std::move(image));
}

ElementBijection ElementBijection::Rotation(int n, int shift) {
  std::vector<int> image(n);
  for (int e = 0; e < n; ++e) image[e] = ((e + shift) % n + n) % n;
  return ElementBijection(std::move(image));
}

SubsetMask ElementBijection::Apply(SubsetMask x) const {
  SubsetMask out;
  x.ForEach([&](int e) { out = out.With(image_[e]); });
  return out;
}

ElementBijection ElementBijection::Inverse() const {
  std::vector<int> inv(image_.size());
  for (int e = 0; e < size(); ++e) inv[image_[e]] = e;
  return ElementBijection(std::move(inv));
}

ElementBijection ElementBijection::After(const ElementBijection& first) const {
  if (first.size() != size()) throw std::invalid_argument("map size mismatch");
  std::vector<int> out(image_.size());
  for (int e = 0; e < size(); ++e) out[e] = image_[first(e)];
  return ElementBijection(std::move(out));
}

}  // namespace cyclicmat
