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


// cyclicmat: command-line front end.
//
// Exit codes: 0 when the checked property holds, 1 when it fails (with a
// witness in the report), 2 on invalid input or unmet preconditions.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclicmat/constructions.h"
#include "cyclicmat/counterexample.h"
#include "cyclicmat/cyclic.h"
#include "cyclicmat/document.h"
#include "cyclicmat/matroid.h"
#include "cyclicmat/suite.h"
#include "cyclicmat/transversal.h"
#include "cyclicmat/weakmap.h"
#include "json.hpp"

namespace cyclicmat {
namespace {

using Json = nlohmann::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInvalid = 2;

// Bad command-line input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::string out;
  std::string format = "json";
  int max_n = 12;
  std::uint64_t seed = 1;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Inline JSON when the argument starts with '[', otherwise a file.
std::vector<int> ReadIndexList(const std::string& arg) {
  const std::string text = !arg.empty() && arg.front() == '[' ? arg : ReadInput(arg);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("invalid index list: ") + e.what());
  }
  if (!j.is_array()) throw UsageError("index list must be a JSON array");
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw UsageError("index list entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<int> ToZeroBased(const std::vector<int>& one_based, int n, const char* what) {
  if (static_cast<int>(one_based.size()) != n) {
    throw UsageError(std::string(what) + " has " + std::to_string(one_based.size()) +
                     " entries, expected " + std::to_string(n));
  }
  std::vector<int> out;
  for (int v : one_based) {
    if (v < 1 || v > n) throw UsageError(std::string(what) + " entry out of range");
    out.push_back(v - 1);
  }
  return out;
}

Matroid LoadMatroid(const std::string& path) { return BuildMatroid(ParseDocument(ReadInput(path))); }

Json SetJson(SubsetMask x) { return x.OneBasedElements(); }

Json FamilyJson(const CircuitFamily& family) {
  Json out = Json::array();
  for (SubsetMask c : family) out.push_back(SetJson(c));
  return out;
}

Json PositionsJson(SubsetMask starts) {
  Json out = Json::array();
  starts.ForEach([&](int b) { out.push_back(b + 1); });
  return out;
}

Json CertificateJson(const OrderingCertificate& cert) {
  Json j = {{"kind", OrderingKindName(cert.kind)},
            {"nearly", cert.nearly},
            {"full", cert.full},
            {"circuit_starts", PositionsJson(cert.circuit_starts)},
            {"cocircuit_starts", PositionsJson(cert.cocircuit_starts)},
            {"witnesses", cert.witnesses}};
  if (cert.circuit_phase) j["circuit_phase"] = *cert.circuit_phase;
  if (cert.cocircuit_phase) j["cocircuit_phase"] = *cert.cocircuit_phase;
  return j;
}

Json WeakMapJson(const WeakMapReport& r) {
  Json j = {{"relation", r.relation}, {"holds", r.holds}, {"notes", r.notes}};
  if (r.violating) j["violating"] = SetJson(*r.violating);
  return j;
}

void Emit(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw UsageError("cannot write " + g.out);
  out << text;
}

void EmitJson(const GlobalOptions& g, const Json& j) { Emit(g, j.dump(2) + "\n"); }

SearchMode ParseMode(const std::string& mode) {
  if (mode == "nearly") return SearchMode::kNearly;
  if (mode == "full") return SearchMode::kFull;
  throw UsageError("mode must be nearly or full");
}

struct GenArgs {
  std::vector<int> psi;
  std::vector<int> uniform;
  std::optional<int> wheel;
  std::optional<int> whirl;
  std::optional<int> spike;
  std::optional<int> truncate;
};

int RunGen(const GlobalOptions& g, const GenArgs& a) {
  std::vector<MatroidDocument> docs;
  if (!a.psi.empty()) docs.push_back(MatroidDocument::Psi(a.psi[0], a.psi[1]));
  if (!a.uniform.empty()) docs.push_back(MatroidDocument::Uniform(a.uniform[0], a.uniform[1]));
  if (a.wheel) docs.push_back(MatroidDocument::Construction("wheel", *a.wheel));
  if (a.whirl) docs.push_back(MatroidDocument::Construction("whirl", *a.whirl));
  if (a.spike) docs.push_back(MatroidDocument::Construction("free_spike", *a.spike));
  if (docs.size() != 1) throw UsageError("gen needs exactly one construction");
  MatroidDocument doc = docs.front();
  if (a.truncate) doc = MatroidDocument::Truncation(doc, *a.truncate);
  BuildMatroid(doc).Rank();  // validates parameters
  Emit(g, EmitDocument(doc));
  return kHolds;
}

int RunRank(const GlobalOptions& g, const std::string& doc, const std::string& set) {
  const Matroid m = LoadMatroid(doc);
  Json j = {{"name", m.name()}, {"n", m.size()}, {"rank", m.Rank()}, {"corank", m.Corank()}};
  if (!set.empty()) {
    SubsetMask x;
    for (int v : ReadIndexList(set)) {
      if (v < 1 || v > m.size()) throw UsageError("set element out of range");
      x = x.With(v - 1);
    }
    j["set"] = SetJson(x);
    j["set_rank"] = m.Rank(x);
  }
  EmitJson(g, j);
  return kHolds;
}

int RunCircuits(const GlobalOptions& g, const std::string& doc, bool cocircuits) {
  const Matroid m = LoadMatroid(doc);
  const CircuitFamily& family = cocircuits ? m.Cocircuits() : m.Circuits();
  EmitJson(g, {{"name", m.name()},
               {"n", m.size()},
               {cocircuits ? "cocircuits" : "circuits", FamilyJson(family)},
               {"count", family.size()}});
  return kHolds;
}

int RunVerifyOrdering(const GlobalOptions& g, const std::string& doc,
                      const std::string& ordering, int s, int t, const std::string& mode) {
  const SearchMode wanted = ParseMode(mode);
  const Matroid m = LoadMatroid(doc);
  const CyclicOrdering sigma(ToZeroBased(ReadIndexList(ordering), m.size(), "ordering"));
  const OrderingCertificate cert = Certify(m, sigma, STParams(s, t));
  const bool holds = wanted == SearchMode::kFull ? cert.full : cert.nearly;
  Json j = CertificateJson(cert);
  j["s"] = s;
  j["t"] = t;
  j["mode"] = mode;
  j["holds"] = holds;
  j["ordering"] = sigma.OneBased();
  EmitJson(g, j);
  return holds ? kHolds : kFails;
}

int RunFindOrderings(const GlobalOptions& g, const std::string& doc, int s, int t,
                     const std::string& mode, int limit) {
  const SearchMode wanted = ParseMode(mode);
  const Matroid m = LoadMatroid(doc);
  if (m.size() > SearchCap()) {
    throw UsageError("ground set of " + std::to_string(m.size()) + " exceeds the search cap " +
                     std::to_string(SearchCap()));
  }
  Json list = Json::array();
  for (const CyclicOrdering& sigma : FindOrderings(m, STParams(s, t), wanted, limit)) {
    list.push_back(sigma.OneBased());
  }
  EmitJson(g, {{"s", s}, {"t", t}, {"mode", mode}, {"count", list.size()}, {"orderings", list}});
  return kHolds;
}

int RunWeakMap(const GlobalOptions& g, const std::string& doc1, const std::string& doc2,
               const std::string& map, bool quotient) {
  const Matroid m1 = LoadMatroid(doc1);
  const Matroid m2 = LoadMatroid(doc2);
  if (m1.size() != m2.size()) throw UsageError("ground sets differ in size");
  Json j;
  bool holds = false;
  if (quotient) {
    if (map != "identity") throw UsageError("--quotient compares on the identity map only");
    const WeakMapReport by_circuits = IsQuotient(m1, m2);
    const bool by_flats = IsQuotientByFlats(m1, m2);
    holds = by_circuits.holds && by_flats;
    j = {{"relation", "quotient"},
         {"holds", holds},
         {"by_circuits", WeakMapJson(by_circuits)},
         {"by_flats", by_flats}};
  } else {
    const ElementBijection phi =
        map == "identity" ? ElementBijection::Identity(m1.size())
                          : ElementBijection(ToZeroBased(ReadIndexList(map), m1.size(), "map"));
    const WeakMapReport by_circuits = IsWeakMap(m1, m2, phi);
    const WeakMapReport by_independence = IsWeakMapByIndependence(m1, m2, phi);
    holds = by_circuits.holds && by_independence.holds;
    j = {{"relation", "weak-map"},
         {"holds", holds},
         {"by_circuits", WeakMapJson(by_circuits)},
         {"by_independence", WeakMapJson(by_independence)}};
  }
  EmitJson(g, j);
  return holds ? kHolds : kFails;
}

int RunSuiteCommand(const GlobalOptions& g, std::vector<std::string> families, bool timings,
                    int threads, bool mutant) {
  SuiteOptions options;
  options.max_n = g.max_n;
  options.seed = g.seed;
  options.families = std::move(families);
  options.timings = timings;
  options.threads = threads;
  options.inject_mutant = mutant;
  const SuiteResult result = RunSuite(options);
  Emit(g, SuiteToJson(result, options));
  if (const SuiteEntry* first = result.FirstFailure()) {
    std::cerr << "FAIL " << first->check << " " << first->instance << ": "
              << (first->failures.empty() ? "" : first->failures.front()) << "\n";
    return kFails;
  }
  return kHolds;
}

int RunCounterexample(const GlobalOptions& g, int n, int s) {
  RequireCounterexampleParameters(n, s);
  const VerificationReport circuits = CheckTwoBlockCircuits(n, s);
  const ForcedCircuitLedger ledger = DeriveForcedCircuits(n, s);
  const RankBoundCertificate cert = CertifyRankBound(ledger);
  Json by_rule = Json::object();
  int non_psi = 0;
  for (const ForcedCircuit& entry : ledger.entries()) {
    by_rule[DerivationRuleName(entry.rule)] = by_rule.value(DerivationRuleName(entry.rule), 0) + 1;
    if (!entry.psi_circuit) ++non_psi;
  }
  const bool holds = circuits.ok && cert.contradiction();
  EmitJson(g, {{"n", n},
               {"s", s},
               {"two_block_circuits",
                {{"checked", circuits.checked},
                 {"failures", circuits.failures},
                 {"ok", circuits.ok}}},
               {"ledger", {{"entries", ledger.entries().size()},
                           {"by_rule", by_rule},
                           {"not_psi_circuits", non_psi}}},
               {"rank_bound",
                {{"chain", cert.Lines()},
                 {"rank_bound", cert.rank_bound},
                 {"assumed_rank", cert.assumed_rank},
                 {"verified", cert.verified},
                 {"contradiction", cert.contradiction()}}},
               {"conclusion", holds ? "psi(" + std::to_string(n) + "," + std::to_string(s) +
                                          ") is not a quotient of M'"
                                    : "no contradiction certified"}});
  return holds ? kHolds : kFails;
}

int Main(int argc, char** argv) {
  CLI::App app{"Cyclic matroid toolkit: constructions, cyclic orderings, weak maps."};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json"}));
  app.add_option("--max-n", g.max_n, "Largest fixture size for suite runs");
  app.add_option("--seed", g.seed, "Seed for randomized fixtures");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a matroid document");
  gen_cmd->add_option("--psi", gen.psi, "psi(n,s): N S")->expected(2);
  gen_cmd->add_option("--uniform", gen.uniform, "U(r,n): R N")->expected(2);
  gen_cmd->add_option("--wheel", gen.wheel, "Rank-r wheel");
  gen_cmd->add_option("--whirl", gen.whirl, "Rank-r whirl");
  gen_cmd->add_option("--spike", gen.spike, "Rank-r free spike");
  gen_cmd->add_option("--truncate", gen.truncate, "Truncate the construction i times");

  std::string doc, doc2, set, ordering, mode = "full", map = "identity";
  int s = 0, t = 0, limit = 0, threads = 0;
  bool cocircuits = false, quotient = false, timings = false, mutant = false;
  std::vector<std::string> families;

  auto* rank_cmd = app.add_subcommand("rank", "Rank and corank of a document");
  rank_cmd->add_option("doc", doc, "Matroid document, or - for stdin")->required();
  rank_cmd->add_option("--set", set, "Also rank this JSON list of one-based indices");

  auto* circuits_cmd = app.add_subcommand("circuits", "Enumerate circuits");
  circuits_cmd->add_option("doc", doc, "Matroid document, or - for stdin")->required();
  circuits_cmd->add_flag("--cocircuits", cocircuits, "Enumerate cocircuits instead");

  auto* verify_cmd = app.add_subcommand("verify-ordering", "Certify a cyclic ordering");
  verify_cmd->add_option("doc", doc, "Matroid document")->required();
  verify_cmd->add_option("ordering", ordering, "JSON array of one-based indices, or a file")
      ->required();
  verify_cmd->add_option("-s", s, "Circuit size")->required();
  verify_cmd->add_option("-t", t, "Cocircuit size")->required();
  verify_cmd->add_option("--mode", mode, "nearly or full");

  auto* find_cmd = app.add_subcommand("find-orderings", "Search all cyclic orderings");
  find_cmd->add_option("doc", doc, "Matroid document")->required();
  find_cmd->add_option("-s", s, "Circuit size")->required();
  find_cmd->add_option("-t", t, "Cocircuit size")->required();
  find_cmd->add_option("--mode", mode, "nearly or full");
  find_cmd->add_option("--limit", limit, "Stop after this many classes (0: no limit)");

  auto* weakmap_cmd = app.add_subcommand("weakmap", "Test a weak map or quotient");
  weakmap_cmd->add_option("source", doc, "Source matroid document")->required();
  weakmap_cmd->add_option("target", doc2, "Target matroid document")->required();
  weakmap_cmd->add_option("--map", map, "identity, or a JSON array of one-based images");
  weakmap_cmd->add_flag("--quotient", quotient, "Test whether target is a quotient of source");

  auto* suite_cmd = app.add_subcommand("suite", "Run the verification suite");
  suite_cmd->add_option("--families", families, "Fixture families (default: all)")
      ->delimiter(',');
  suite_cmd->add_flag("--timings", timings, "Include per-entry wall-clock seconds");
  suite_cmd->add_option("--threads", threads, "Worker threads (0: hardware)");
  suite_cmd->add_flag("--inject-mutant", mutant, "Add a deliberately broken fixture")
      ->group("");

  int cn = 0, cs = 0;
  auto* counter_cmd = app.add_subcommand("counterexample", "Certify the rank contradiction");
  counter_cmd->add_option("n", cn, "Ground set size")->required();
  counter_cmd->add_option("s", cs, "Circuit size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*gen_cmd) return RunGen(g, gen);
    if (*rank_cmd) return RunRank(g, doc, set);
    if (*circuits_cmd) return RunCircuits(g, doc, cocircuits);
    if (*verify_cmd) return RunVerifyOrdering(g, doc, ordering, s, t, mode);
    if (*find_cmd) return RunFindOrderings(g, doc, s, t, mode, limit);
    if (*weakmap_cmd) return RunWeakMap(g, doc, doc2, map, quotient);
    if (*suite_cmd) return RunSuiteCommand(g, families, timings, threads, mutant);
    if (*counter_cmd) return RunCounterexample(g, cn, cs);
  } catch (const EnumerationLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFails;
  }
  return kInvalid;
}

}  // namespace
}  // namespace cyclicmat

int main(int argc, char** argv) { return cyclicmat::Main(argc, argv); }
