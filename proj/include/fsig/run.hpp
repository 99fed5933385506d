// Copyright 2026 The fsigtool authors
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

#ifndef FSIG_RUN_HPP
#define FSIG_RUN_HPP

#include <optional>
#include <string>
#include <vector>

#include "fsig/result.hpp"

namespace fsig {

/// CLI-level options; anything unset falls back to the problem file's task
/// section, then to built-in defaults.
struct RunOptions {
    std::optional<long long> emax;
    std::optional<long long> e;
    std::optional<long long> r;
    std::vector<std::string> grid;
    std::optional<std::string> rounding;  // "qm1" | "q"
    std::string order = "grevlex";        // "grevlex" | "lex"
    std::string format = "json";          // "json" | "csv"
    int threads = 0;                      // 0 = library default
    std::optional<unsigned long long> budget;
};

struct RunOutcome {
    int exit_code = 0;        // 0 ok, 1 input/resource error, 2 check failure
    std::string output;       // rendered document (stdout)
    std::string diagnostics;  // human diagnostics (stderr)
};

/// Executes one batch command against a problem file's text. `command` may be
/// empty, in which case the file's task section decides. Never throws;
/// failures land in the exit code and diagnostics.
RunOutcome run_task(const std::string& command, const std::string& problem_text,
                    const RunOptions& opts);

}  // namespace fsig

#endif
