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


// The verification suite: every structural check of the library run over a
// grid of fixtures, collected into one machine-readable report.

#ifndef CYCLICMAT_SUITE_H_
#define CYCLICMAT_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace cyclicmat {

struct SuiteOptions {
  // Largest ground set included in the fixture grid.
  int max_n = 12;
  // Fixture families to run; empty runs every default family.
  std::vector<std::string> families;
  std::uint64_t seed = 1;
  // Include per-entry wall-clock seconds in the JSON report. Off by default
  // so reports are byte-identical across runs.
  bool timings = false;
  // Worker threads; 0 uses the hardware concurrency.
  int threads = 0;
  // Adds a fixture with one circuit removed from a valid family, which must fail.
  bool inject_mutant = false;
};

struct SuiteEntry {
  std::string check;
  std::string family;
  std::string instance;
  bool ok = true;
  long checked = 0;
  long failure_count = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0.0;
};

struct SuiteResult {
  // Sorted by (family, instance, check), independent of scheduling.
  std::vector<SuiteEntry> entries;
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  // First failing entry in report order, or nullptr.
  const SuiteEntry* FirstFailure() const;
};

// "psi", "truncation", "uniform", "constructions", "orderings", "counterexample".
const std::vector<std::string>& SuiteFamilies();

// Throws std::invalid_argument on an unknown family or max_n outside [4, 20].
SuiteResult RunSuite(const SuiteOptions& options);

// Canonical JSON: sorted keys, entries in report order, trailing newline.
std::string SuiteToJson(const SuiteResult& result, const SuiteOptions& options);

}  // namespace cyclicmat

#endif  // CYCLICMAT_SUITE_H_
