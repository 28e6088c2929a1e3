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


// Versioned JSON documents describing a matroid by one of its constructions.
//
//   {"version": 1, "labels": ["e1", ...], <representation>}
//
// where <representation> is exactly one of
//   "circuits":     [[1, 2, 3], ...]            one-based indices
//   "uniform":      {"r": 2, "n": 5}
//   "psi":          {"n": 12, "s": 4}
//   "transversal":  {"neighborhoods": [[1, 2], ...]}
//   "construction": {"kind": "wheel" | "whirl" | "free_spike", "r": 4}
//   "truncate":     {"inner": <document>, "i": 1}
//
// Emitted documents have sorted keys and canonically ordered set lists, so
// parse followed by emit is a fixed point.

#ifndef CYCLICMAT_DOCUMENT_H_
#define CYCLICMAT_DOCUMENT_H_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclicmat/matroid.h"

namespace cyclicmat {

// Malformed or inconsistent document.
class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDocumentVersion = 1;

struct MatroidDocument {
  enum class Kind { kCircuits, kUniform, kPsi, kTransversal, kConstruction, kTruncate };

  Kind kind = Kind::kCircuits;
  std::vector<std::string> labels;
  // kCircuits: circuits; kTransversal: neighborhoods. One-based, ascending.
  std::vector<std::vector<int>> sets;
  // kUniform: r, n. kPsi: n, s. kConstruction: r. kTruncate: i.
  int r = 0;
  int n = 0;
  int s = 0;
  int i = 0;
  std::string construction;  // "wheel", "whirl" or "free_spike"
  std::shared_ptr<const MatroidDocument> inner;

  static MatroidDocument Uniform(int r, int n);
  static MatroidDocument Psi(int n, int s);
  static MatroidDocument Construction(const std::string& kind, int r);
  static MatroidDocument Truncation(MatroidDocument inner, int i);
  static MatroidDocument Circuits(int n, const CircuitFamily& circuits);
  static MatroidDocument Transversal(int n, std::vector<std::vector<int>> neighborhoods);

  // Number of ground-set elements the representation describes.
  int GroundSize() const;
};

// Throws DocumentError.
MatroidDocument ParseDocument(const std::string& text);
std::string EmitDocument(const MatroidDocument& doc);

// Throws DocumentError or std::invalid_argument on bad parameters.
Matroid BuildMatroid(const MatroidDocument& doc);

}  // namespace cyclicmat

#endif  // CYCLICMAT_DOCUMENT_H_
