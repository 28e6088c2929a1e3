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

#include "cyclicmat/report.h"

namespace cyclicmat {

void VerificationReport::Fail(std::string witness) {
  ok = false;
  ++failure_count;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(witness));
}

void VerificationReport::Expect(bool holds, const std::string& witness) {
  ++checked;
  if (!holds) Fail(witness);
}

void VerificationReport::Merge(const VerificationReport& other) {
  checked += other.checked;
  failure_count += other.failure_count;
  ok = ok && other.ok;
  for (const auto& f : other.failures) {
    if (failures.size() >= kMaxRecordedFailures) break;
    failures.push_back(f);
  }
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

}  // namespace cyclicmat
