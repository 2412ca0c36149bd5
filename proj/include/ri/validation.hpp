// Copyright 2026 The ri-thermalizer Authors
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

#ifndef RI_VALIDATION_HPP
#define RI_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ri {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

// Cross-checks between independent execution paths (joint unitary vs recursions, closed
// forms vs numerics). Deterministic in seed.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed = 0);

}  // namespace ri

#endif  // RI_VALIDATION_HPP
