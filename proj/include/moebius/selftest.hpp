/*
   Copyright 2026 the moebius project authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>

namespace moebius::selftest {

struct Options {
  /// Soft time budget. The reference-value suite always runs; the heavier
  /// identity suites use reduced ranges under small budgets and are skipped
  /// once the budget is spent.
  double budget_seconds = 120.0;
  bool json = false;
  /// Test hook: flips one mu sign inside a divisor-sum check so the failure
  /// reporting path can be exercised. Never set in normal operation.
  bool fault_injection = false;
};

/// Replays the library's identity and oracle-equivalence suites, reporting
/// one line per suite. Returns 0 when every executed suite passes, 2 when
/// any fails (the report names the counterexample).
int run(const Options& options, std::ostream& out);

}  // namespace moebius::selftest
