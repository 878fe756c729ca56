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

namespace lmrep {

/// Exit codes shared by the command layer: 0 success, 1 parse/usage,
/// 2 domain precondition, 3 property failure (selfcheck).
struct JobConfig {
    std::string ring = "Z";
    std::string f;
    std::string ideal_text;
    std::string matrix_path;
    long prime_bound = 0;
    int exp_bound = 0;
    int box = 0;
    unsigned long seed = 42;
    bool assert_irreducible = false;
    bool compact_json = false;
    int example = 0;   // 1 or 2 select the built-in presets
};

struct CmdResult {
    int exit_code = 0;
    std::string output;   // JSON document or selfcheck transcript
};

/// Applies the --example presets onto unset fields.
void apply_example_preset(JobConfig& config);

CmdResult cmd_repr(JobConfig config);
CmdResult cmd_forward(JobConfig config);
CmdResult cmd_classes(JobConfig config);
CmdResult cmd_selfcheck(JobConfig config);

}   // namespace lmrep
