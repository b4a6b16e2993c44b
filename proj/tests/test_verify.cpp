// Copyright 2026 The ghzbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "ghzbell/verify.hpp"

namespace ghzbell {
namespace {

TEST(Verify, AllChecksPass) {
  const auto checks = run_verification();
  ASSERT_EQ(checks.size(), 6u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Verify, SignFaultIsCaught) {
  VerifyOptions o;
  o.quick = true;
  o.inject_mermin_sign_fault = true;
  int failed = 0;
  for (const auto& c : run_verification(o)) {
    if (!c.passed) {
      ++failed;
      EXPECT_NE(c.name.find("polynomial identities"), std::string::npos) << c.name;
    }
  }
  EXPECT_EQ(failed, 1);
}

}  // namespace
}  // namespace ghzbell
