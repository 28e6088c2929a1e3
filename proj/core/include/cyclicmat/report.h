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

#ifndef CYCLICMAT_REPORT_H_
#define CYCLICMAT_REPORT_H_

#include <string>
#include <utility>
#include <vector>

namespace cyclicmat {

// Pass/fail record of one structural check run against one instance.
struct VerificationReport {
  static constexpr int kMaxRecordedFailures = 16;

  std::string check;
  std::string subject;
  bool ok = true;
  long checked = 0;
  long failure_count = 0;
  // The first kMaxRecordedFailures witnesses, in discovery order.
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  VerificationReport() = default;
  VerificationReport(std::string check_name, std::string subject_name)
      : check(std::move(check_name)), subject(std::move(subject_name)) {}

  void Fail(std::string witness);
  void Note(std::string note) { notes.push_back(std::move(note)); }
  // Records one checked instance; calls Fail(witness) when !holds.
  void Expect(bool holds, const std::string& witness);
  void Merge(const VerificationReport& other);
};

}  // namespace cyclicmat

#endif  // CYCLICMAT_REPORT_H_
