/*
   Copyright 2026 The lmrep authors

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

#include <string>
#include <vector>

namespace lmrep {

struct SelfcheckOptions {
    unsigned long seed = 42;
    /// Negative-control hook: flips the sign of u_1 in the closed form so the
    /// conjugation suite must fail with a counterexample.
    bool mutate_u1_sign = false;
};

struct SuiteResult {
    std::string name;
    int cases = 0;
    bool passed = true;
    std::string counterexample;   // serialized first failure, empty when passed
};

struct SelfcheckReport {
    std::vector<SuiteResult> suites;
    bool all_passed = true;
};

/// Runs the randomized invariant suites over both rings. Deterministic for a
/// fixed seed.
SelfcheckReport run_selfcheck(const SelfcheckOptions& options);

}   // namespace lmrep
