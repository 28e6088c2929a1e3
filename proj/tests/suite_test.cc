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


#include "cyclicmat/suite.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "gtest/gtest.h"

namespace cyclicmat {
namespace {

SuiteOptions Small() {
  SuiteOptions options;
  options.max_n = 8;
  options.families = {"uniform", "counterexample", "constructions"};
  return options;
}

TEST(SuiteTest, SmallGridPasses) {
  const SuiteResult result = RunSuite(Small());
  EXPECT_TRUE(result.ok());
  EXPECT_GT(result.passed(), 50);
  EXPECT_EQ(result.FirstFailure(), nullptr);
  EXPECT_TRUE(std::is_sorted(result.entries.begin(), result.entries.end(),
                             [](const SuiteEntry& a, const SuiteEntry& b) {
                               return std::tie(a.family, a.instance, a.check) <
                                      std::tie(b.family, b.instance, b.check);
                             }));
}

TEST(SuiteTest, ReportIsIndependentOfThreadCount) {
  SuiteOptions serial = Small();
  serial.threads = 1;
  SuiteOptions parallel = Small();
  parallel.threads = 4;
  EXPECT_EQ(SuiteToJson(RunSuite(serial), serial), SuiteToJson(RunSuite(parallel), parallel));
}

TEST(SuiteTest, SeedOnlyAffectsSeededFixtures) {
  SuiteOptions a = Small();
  a.families = {"counterexample"};
  SuiteOptions b = a;
  b.seed = 99;
  const std::string ja = SuiteToJson(RunSuite(a), a);
  const std::string jb = SuiteToJson(RunSuite(b), b);
  EXPECT_NE(ja.find("\"seed\": 1"), std::string::npos);
  EXPECT_NE(jb.find("\"seed\": 99"), std::string::npos);
}

TEST(SuiteTest, MutantFailsWithAWitness) {
  SuiteOptions options = Small();
  options.families = {"uniform"};
  options.inject_mutant = true;
  const SuiteResult result = RunSuite(options);
  ASSERT_FALSE(result.ok());
  const SuiteEntry* first = result.FirstFailure();
  ASSERT_NE(first, nullptr);
  EXPECT_EQ(first->family, "mutant");
  EXPECT_EQ(first->check, "circuit-axioms");
  ASSERT_FALSE(first->failures.empty());
  const std::string json = SuiteToJson(result, options);
  EXPECT_NE(json.find("\"first_failure\""), std::string::npos);
}

TEST(SuiteTest, TimingsOnlyWhenRequested) {
  SuiteOptions options = Small();
  options.families = {"counterexample"};
  EXPECT_EQ(SuiteToJson(RunSuite(options), options).find("\"seconds\""), std::string::npos);
  options.timings = true;
  EXPECT_NE(SuiteToJson(RunSuite(options), options).find("\"seconds\""), std::string::npos);
}

TEST(SuiteTest, RejectsUnknownFamiliesAndSizes) {
  SuiteOptions options;
  options.families = {"bogus"};
  EXPECT_THROW(RunSuite(options), std::invalid_argument);
  options.families.clear();
  options.max_n = 3;
  EXPECT_THROW(RunSuite(options), std::invalid_argument);
}

}  // namespace
}  // namespace cyclicmat
