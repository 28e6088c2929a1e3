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


#include "cyclicmat/document.h"

#include <string>
#include <vector>

#include "cyclicmat/constructions.h"
#include "cyclicmat/transversal.h"
#include "gtest/gtest.h"

namespace cyclicmat {
namespace {

std::vector<MatroidDocument> Fixtures() {
  return {MatroidDocument::Psi(12, 4),
          MatroidDocument::Uniform(2, 5),
          MatroidDocument::Construction("wheel", 4),
          MatroidDocument::Construction("whirl", 3),
          MatroidDocument::Construction("free_spike", 4),
          MatroidDocument::Truncation(MatroidDocument::Psi(10, 3), 1),
          MatroidDocument::Circuits(6, Wheel(3).Circuits()),
          MatroidDocument::Transversal(5, {{3, 1}, {2, 5, 4}})};
}

TEST(DocumentTest, EmitParseEmitIsAFixedPoint) {
  for (const MatroidDocument& doc : Fixtures()) {
    const std::string text = EmitDocument(doc);
    EXPECT_EQ(EmitDocument(ParseDocument(text)), text) << text;
  }
}

TEST(DocumentTest, BuildsTheDescribedMatroid) {
  EXPECT_EQ(BuildMatroid(MatroidDocument::Psi(8, 3)).Circuits(), FreeCyclic(8, 3).Circuits());
  EXPECT_EQ(BuildMatroid(MatroidDocument::Construction("whirl", 4)).Circuits(),
            Whirl(4).Circuits());
  EXPECT_EQ(BuildMatroid(MatroidDocument::Circuits(6, Wheel(3).Circuits())).Circuits(),
            Wheel(3).Circuits());
  EXPECT_EQ(BuildMatroid(MatroidDocument::Truncation(MatroidDocument::Psi(10, 3), 1)).Rank(), 4);
  const Matroid t = BuildMatroid(MatroidDocument::Transversal(5, {{1, 3}, {2, 4, 5}}));
  EXPECT_EQ(t.Rank(), 2);
  EXPECT_FALSE(t.IsIndependent(SubsetMask::OfOneBased({1, 3})));
}

TEST(DocumentTest, CanonicalizesSetsAndSortsKeys) {
  const MatroidDocument doc = ParseDocument(
      R"({"version": 1, "labels": ["a", "b", "c"], "circuits": [[3, 2, 1]]})");
  const std::string text = EmitDocument(doc);
  EXPECT_NE(text.find("[\n    [\n      1,\n      2,\n      3"), std::string::npos) << text;
  EXPECT_LT(text.find("\"circuits\""), text.find("\"labels\""));
  EXPECT_LT(text.find("\"labels\""), text.find("\"version\""));
  EXPECT_EQ(BuildMatroid(doc).ground().labels(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(DocumentTest, LabelsDefaultForParametricDocuments) {
  const MatroidDocument doc = ParseDocument(R"({"version": 1, "uniform": {"r": 1, "n": 3}})");
  EXPECT_EQ(doc.labels, (std::vector<std::string>{"e1", "e2", "e3"}));
}

TEST(DocumentTest, RejectsMalformedDocuments) {
  const std::vector<std::string> bad = {
      "not json",
      R"([])",
      R"({"uniform": {"r": 1, "n": 3}})",
      R"({"version": 2, "uniform": {"r": 1, "n": 3}})",
      R"({"version": 1})",
      R"({"version": 1, "uniform": {"r": 1, "n": 3}, "psi": {"n": 8, "s": 3}})",
      R"({"version": 1, "uniform": {"r": 1, "n": 3}, "extra": 0})",
      R"({"version": 1, "uniform": {"r": 1, "n": 3, "k": 2}})",
      R"({"version": 1, "uniform": {"r": 1}})",
      R"({"version": 1, "circuits": [[1, 2]]})",
      R"({"version": 1, "labels": ["a", "b"], "circuits": [[1, 3]]})",
      R"({"version": 1, "labels": ["a", "a"], "circuits": [[1, 2]]})",
      R"({"version": 1, "labels": ["a"], "uniform": {"r": 1, "n": 3}})",
      R"({"version": 1, "construction": {"kind": "swirl", "r": 3}})",
      R"({"version": 1, "truncate": {"i": 1}})",
  };
  for (const std::string& text : bad) {
    EXPECT_THROW(ParseDocument(text), DocumentError) << text;
  }
}

TEST(DocumentTest, RejectsFamiliesViolatingTheCircuitAxioms) {
  const MatroidDocument doc =
      ParseDocument(R"({"version": 1, "labels": ["a", "b", "c"], "circuits": [[1, 2], [2, 3]]})");
  EXPECT_THROW(BuildMatroid(doc), DocumentError);
  EXPECT_THROW(BuildMatroid(MatroidDocument::Psi(7, 3)), std::invalid_argument);
}

}  // namespace
}  // namespace cyclicmat
