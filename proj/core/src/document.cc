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

#include <algorithm>
#include <set>
#include <utility>

#include "cyclicmat/constructions.h"
#include "cyclicmat/transversal.h"
#include "json.hpp"

namespace cyclicmat {
namespace {

using Json = nlohmann::json;

constexpr const char* kRepresentations[] = {"circuits", "uniform", "psi",
                                           "transversal", "construction", "truncate"};

std::vector<std::string> DefaultLabels(int n) {
  std::vector<std::string> out;
  for (int e = 1; e <= n; ++e) out.push_back("e" + std::to_string(e));
  return out;
}

std::vector<int> Canonical(std::vector<int> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

SubsetMask ToMask(const std::vector<int>& set, int n) {
  for (int e : set) {
    if (e < 1 || e > n) {
      throw DocumentError("element index " + std::to_string(e) + " outside 1.." +
                          std::to_string(n));
    }
  }
  return SubsetMask::OfOneBased(std::span<const int>(set));
}

int GetInt(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number_integer()) {
    throw DocumentError(std::string("expected integer field \"") + key + "\"");
  }
  return obj.at(key).get<int>();
}

void RequireKeys(const Json& obj, std::initializer_list<const char*> keys, const char* where) {
  if (!obj.is_object()) throw DocumentError(std::string(where) + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
      throw DocumentError(std::string("unknown field \"") + key + "\" in " + where);
    }
  }
}

std::vector<std::vector<int>> GetSets(const Json& value, const char* what) {
  if (!value.is_array()) throw DocumentError(std::string(what) + " must be an array");
  std::vector<std::vector<int>> out;
  for (const Json& set : value) {
    if (!set.is_array()) throw DocumentError(std::string(what) + " entries must be arrays");
    std::vector<int> members;
    for (const Json& e : set) {
      if (!e.is_number_integer()) throw DocumentError("set members must be integers");
      members.push_back(e.get<int>());
    }
    out.push_back(std::move(members));
  }
  return out;
}

MatroidDocument FromJson(const Json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  if (!j.contains("version") || !j.at("version").is_number_integer() ||
      j.at("version").get<int>() != kDocumentVersion) {
    throw DocumentError("unsupported or missing document version");
  }
  std::vector<std::string> present;
  for (const char* key : kRepresentations) {
    if (j.contains(key)) present.push_back(key);
  }
  if (present.size() != 1) {
    throw DocumentError("document needs exactly one representation, found " +
                        std::to_string(present.size()));
  }
  RequireKeys(j, {"version", "labels", present.front().c_str()}, "document");
  const std::string& rep = present.front();
  const Json& body = j.at(rep);

  MatroidDocument doc;
  if (rep == "circuits") {
    doc.kind = MatroidDocument::Kind::kCircuits;
    doc.sets = GetSets(body, "circuits");
  } else if (rep == "uniform") {
    RequireKeys(body, {"r", "n"}, "uniform");
    doc.kind = MatroidDocument::Kind::kUniform;
    doc.r = GetInt(body, "r");
    doc.n = GetInt(body, "n");
  } else if (rep == "psi") {
    RequireKeys(body, {"n", "s"}, "psi");
    doc.kind = MatroidDocument::Kind::kPsi;
    doc.n = GetInt(body, "n");
    doc.s = GetInt(body, "s");
  } else if (rep == "transversal") {
    RequireKeys(body, {"neighborhoods"}, "transversal");
    doc.kind = MatroidDocument::Kind::kTransversal;
    if (!body.contains("neighborhoods")) throw DocumentError("missing neighborhoods");
    doc.sets = GetSets(body.at("neighborhoods"), "neighborhoods");
  } else if (rep == "construction") {
    RequireKeys(body, {"kind", "r"}, "construction");
    doc.kind = MatroidDocument::Kind::kConstruction;
    if (!body.contains("kind") || !body.at("kind").is_string()) {
      throw DocumentError("construction needs a string \"kind\"");
    }
    doc.construction = body.at("kind").get<std::string>();
    doc.r = GetInt(body, "r");
    if (doc.construction != "wheel" && doc.construction != "whirl" &&
        doc.construction != "free_spike") {
      throw DocumentError("unknown construction \"" + doc.construction + "\"");
    }
  } else {
    RequireKeys(body, {"inner", "i"}, "truncate");
    doc.kind = MatroidDocument::Kind::kTruncate;
    if (!body.contains("inner")) throw DocumentError("truncate needs \"inner\"");
    doc.inner = std::make_shared<const MatroidDocument>(FromJson(body.at("inner")));
    doc.i = GetInt(body, "i");
  }

  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (!labels.is_array()) throw DocumentError("labels must be an array");
    for (const Json& label : labels) {
      if (!label.is_string()) throw DocumentError("labels must be strings");
      doc.labels.push_back(label.get<std::string>());
    }
  } else if (doc.kind == MatroidDocument::Kind::kCircuits ||
             doc.kind == MatroidDocument::Kind::kTransversal) {
    throw DocumentError("circuit and transversal documents need labels");
  } else {
    doc.labels = DefaultLabels(doc.GroundSize());
  }
  const int n = static_cast<int>(doc.labels.size());
  if (n < 1 || n > kMaxGroundSize) throw DocumentError("ground set size out of range");
  if (doc.kind != MatroidDocument::Kind::kCircuits &&
      doc.kind != MatroidDocument::Kind::kTransversal && n != doc.GroundSize()) {
    throw DocumentError("labels do not match the ground set size");
  }
  if (std::set<std::string>(doc.labels.begin(), doc.labels.end()).size() != doc.labels.size()) {
    throw DocumentError("labels must be distinct");
  }
  if (doc.kind == MatroidDocument::Kind::kCircuits) {
    std::vector<SubsetMask> masks;
    for (const auto& c : doc.sets) masks.push_back(ToMask(c, n));
    doc = MatroidDocument::Circuits(n, CircuitFamily(std::move(masks)));
    doc.labels.clear();
    for (const Json& label : j.at("labels")) doc.labels.push_back(label.get<std::string>());
  } else if (doc.kind == MatroidDocument::Kind::kTransversal) {
    for (auto& set : doc.sets) {
      ToMask(set, n);
      set = Canonical(std::move(set));
    }
  }
  return doc;
}

Json ToJson(const MatroidDocument& doc) {
  Json j;
  j["version"] = kDocumentVersion;
  j["labels"] = doc.labels;
  switch (doc.kind) {
    case MatroidDocument::Kind::kCircuits:
      j["circuits"] = doc.sets;
      break;
    case MatroidDocument::Kind::kUniform:
      j["uniform"] = {{"r", doc.r}, {"n", doc.n}};
      break;
    case MatroidDocument::Kind::kPsi:
      j["psi"] = {{"n", doc.n}, {"s", doc.s}};
      break;
    case MatroidDocument::Kind::kTransversal:
      j["transversal"] = {{"neighborhoods", doc.sets}};
      break;
    case MatroidDocument::Kind::kConstruction:
      j["construction"] = {{"kind", doc.construction}, {"r", doc.r}};
      break;
    case MatroidDocument::Kind::kTruncate:
      j["truncate"] = {{"inner", ToJson(*doc.inner)}, {"i", doc.i}};
      break;
  }
  return j;
}

Matroid WithLabels(const Matroid& m, const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != m.size()) {
    throw DocumentError("labels do not match the ground set size");
  }
  if (labels == m.ground().labels()) return m;
  return Matroid(
      GroundSet(labels), [m](SubsetMask x) { return m.IsIndependent(x); }, m.name());
}

}  // namespace

MatroidDocument MatroidDocument::Uniform(int r, int n) {
  MatroidDocument doc;
  doc.kind = Kind::kUniform;
  doc.r = r;
  doc.n = n;
  doc.labels = DefaultLabels(n);
  return doc;
}

MatroidDocument MatroidDocument::Psi(int n, int s) {
  MatroidDocument doc;
  doc.kind = Kind::kPsi;
  doc.n = n;
  doc.s = s;
  doc.labels = DefaultLabels(n);
  return doc;
}

MatroidDocument MatroidDocument::Construction(const std::string& kind, int r) {
  MatroidDocument doc;
  doc.kind = Kind::kConstruction;
  doc.construction = kind;
  doc.r = r;
  doc.labels = DefaultLabels(doc.GroundSize());
  return doc;
}

MatroidDocument MatroidDocument::Truncation(MatroidDocument inner, int i) {
  MatroidDocument doc;
  doc.kind = Kind::kTruncate;
  doc.labels = inner.labels;
  doc.inner = std::make_shared<const MatroidDocument>(std::move(inner));
  doc.i = i;
  return doc;
}

MatroidDocument MatroidDocument::Circuits(int n, const CircuitFamily& circuits) {
  MatroidDocument doc;
  doc.kind = Kind::kCircuits;
  doc.labels = DefaultLabels(n);
  for (SubsetMask c : circuits) doc.sets.push_back(c.OneBasedElements());
  return doc;
}

MatroidDocument MatroidDocument::Transversal(int n, std::vector<std::vector<int>> neighborhoods) {
  MatroidDocument doc;
  doc.kind = Kind::kTransversal;
  doc.labels = DefaultLabels(n);
  for (auto& set : neighborhoods) doc.sets.push_back(Canonical(std::move(set)));
  return doc;
}

int MatroidDocument::GroundSize() const {
  switch (kind) {
    case Kind::kUniform:
    case Kind::kPsi:
      return n;
    case Kind::kConstruction:
      return 2 * r;
    case Kind::kTruncate:
      return inner ? inner->GroundSize() : 0;
    case Kind::kCircuits:
    case Kind::kTransversal:
      break;
  }
  return static_cast<int>(labels.size());
}

MatroidDocument ParseDocument(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  return FromJson(j);
}

std::string EmitDocument(const MatroidDocument& doc) { return ToJson(doc).dump(2) + "\n"; }

Matroid BuildMatroid(const MatroidDocument& doc) {
  const int n = doc.GroundSize();
  switch (doc.kind) {
    case MatroidDocument::Kind::kCircuits: {
      std::vector<SubsetMask> masks;
      for (const auto& c : doc.sets) masks.push_back(ToMask(c, n));
      CircuitFamily family(std::move(masks));
      if (n <= kMaxTableSize && !ValidateCircuitAxioms(family, n).ok()) {
        throw DocumentError("circuit list violates the circuit axioms");
      }
      return FromCircuits(GroundSet(doc.labels), std::move(family), "circuits");
    }
    case MatroidDocument::Kind::kUniform:
      return WithLabels(Uniform(doc.r, doc.n), doc.labels);
    case MatroidDocument::Kind::kPsi:
      return WithLabels(FreeCyclic(doc.n, doc.s), doc.labels);
    case MatroidDocument::Kind::kTransversal: {
      std::vector<SubsetMask> nbhds;
      for (const auto& set : doc.sets) nbhds.push_back(ToMask(set, n));
      if (nbhds.empty()) throw DocumentError("transversal document needs neighborhoods");
      return TransversalMatroid(BipartitePresentation(GroundSet(doc.labels), std::move(nbhds)),
                                "transversal");
    }
    case MatroidDocument::Kind::kConstruction: {
      Matroid base = doc.construction == "wheel"   ? Wheel(doc.r)
                     : doc.construction == "whirl" ? Whirl(doc.r)
                                                   : FreeSpike(doc.r);
      return WithLabels(base, doc.labels);
    }
    case MatroidDocument::Kind::kTruncate:
      return WithLabels(Truncate(BuildMatroid(*doc.inner), doc.i), doc.labels);
  }
  throw DocumentError("unknown representation");
}

}  // namespace cyclicmat
