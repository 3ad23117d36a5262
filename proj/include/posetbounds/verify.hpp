// Copyright 2026 The posetbounds Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace posetbounds {

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 100'000;
  double tol = 1e-8;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// lemmas, polytopes, orderstats, sp, adversary.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Results come back sorted by
/// (suite, name). Throws ValueError for an unknown suite.
std::vector<PropertyResult> run_suite(const std::string& name, const VerifyConfig& config);

}  // namespace posetbounds
