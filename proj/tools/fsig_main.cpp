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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fsig/run.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fsigtool: exact F-signature, Hilbert-Kunz, F-pure threshold, different and "
                 "cyclic-cover calculations over F_p"};
    app.require_subcommand(1);

    std::string file;
    fsig::RunOptions opts;
    long long emax = -1, e = -1, r = -1;
    std::string grid, rounding;
    unsigned long long budget = 0;

    if (const char* env = std::getenv("FSIG_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) opts.budget = v;
    }

    auto add_common = [&](CLI::App* cmd, bool needs_file) {
        if (needs_file) cmd->add_option("file", file, "problem file (TOML)")->required();
        cmd->add_option("--emax", emax, "largest Frobenius level");
        cmd->add_option("--e", e, "working level e");
        cmd->add_option("--r", r, "reference level r");
        cmd->add_option("--grid", grid, "comma-separated exact rationals in [0,1]");
        cmd->add_option("--rounding", rounding, "qm1 (default) or q");
        cmd->add_option("--order", opts.order, "grevlex (default) or lex");
        cmd->add_option("--format", opts.format, "json (default) or csv");
        cmd->add_option("--threads", opts.threads, "worker threads for independent cells");
        cmd->add_option("--budget", budget, "reduction-step budget");
    };

    for (const char* name : {"fsig", "curve", "diff", "hk", "fpt", "ratio", "adjoint-check",
                             "verify-cover"})
        add_common(app.add_subcommand(name), true);
    add_common(app.add_subcommand("selftest", "run the built-in invariant suites"), false);

    CLI11_PARSE(app, argc, argv);

    if (emax >= 0) opts.emax = emax;
    if (e >= 0) opts.e = e;
    if (r >= 0) opts.r = r;
    if (!grid.empty()) opts.grid = split_commas(grid);
    if (!rounding.empty()) opts.rounding = rounding;
    if (budget > 0) opts.budget = budget;

    const std::string command = app.get_subcommands().front()->get_name();

    std::string text;
    if (command != "selftest") {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "cannot open '" << file << "'\n";
            return 1;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    fsig::RunOutcome outcome = fsig::run_task(command, text, opts);
    std::cout << outcome.output;
    std::cerr << outcome.diagnostics;
    return outcome.exit_code;
}
