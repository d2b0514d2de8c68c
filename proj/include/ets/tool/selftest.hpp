// Copyright 2026 The ets Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ETS_TOOL_SELFTEST_HPP_
#define ETS_TOOL_SELFTEST_HPP_

#include <string>
#include <vector>

namespace ets::tool {

struct SelftestOptions {
  // Runs the engine and game checks against SaboteurScheme instead of the
  // real scheme. The selftest must then fail.
  bool inject_saboteur = false;
};

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;

  bool passed() const;
  // nullptr when everything passed.
  const SelftestCheck* first_failure() const;
};

// Compression KATs, toy-scale encode/decode sweep, encoder oracle agreement,
// engine roundtrips and tamper rejection on every real backend, a golden toy
// vector, and the SAFE/INT game suite.
SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace ets::tool

#endif  // ETS_TOOL_SELFTEST_HPP_
