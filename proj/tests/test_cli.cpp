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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fsig/problem.hpp"
#include "fsig/run.hpp"

using namespace fsig;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(FSIG_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json strip_timing(const std::string& json_text) {
    Json doc = Json::parse(json_text);
    doc.erase("timing");
    return doc;
}

}  // namespace

TEST_CASE("problem file parsing") {
    const std::string text = R"(
# comment
[ring]
p = 5
vars = ["x", "y", "z"]
quotient = "x*y - z^2"

[divisor.D]
components = [
  { poly = "x", num = 1, den = 2 },
]

[pair]
D = "D"
rounding = "qm1"

[base.bD]
vars = ["y"]
reduce = { x = "0", y = "y", z = "0" }

[task]
command = "curve"
e = 2
grid = ["0", "1/2", "1"]
)";
    ProblemFile pf = parse_problem(text);
    CHECK(pf.p == 5);
    CHECK(pf.vars == std::vector<std::string>{"x", "y", "z"});
    CHECK(*pf.quotient == "x*y - z^2");
    CHECK(pf.divisors.at("D").size() == 1);
    CHECK(pf.divisors.at("D")[0].den == 2);
    CHECK(*pf.d_name == "D");
    CHECK(pf.bases.at("bD").reduce.at("x") == "0");
    CHECK(pf.command == "curve");
    CHECK(pf.grid.size() == 3);

    Workspace ws = build_workspace(pf);
    CHECK(ws.pres.dimension == 2);
    CHECK(ws.divisor_d.has_value());
    CHECK(ws.bases.count("bD") == 1);
}

TEST_CASE("problem file errors carry position and fail referential integrity") {
    try {
        (void)parse_problem("[ring]\np = \"five\"\n");
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == Errc::parse);
    }
    try {
        (void)parse_problem("[ring\np = 5\n");
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == Errc::parse);
        CHECK(err.line() == 1);
    }
    // unresolved divisor reference
    ProblemFile pf = parse_problem(
        "[ring]\np = 5\nvars = [\"x\"]\n[pair]\ndelta = \"missing\"\n[task]\ncommand = "
        "\"fsig\"\n");
    CHECK_THROWS_AS((void)build_workspace(pf), Error);
    // malformed rational text
    CHECK_THROWS_AS((void)parse_rational_text("a/b"), Error);
    CHECK(parse_rational_text("3/4") == Rational(3, 4));
}

TEST_CASE("fsig run: records, extrapolation, exit code 0") {
    RunOptions opts;
    RunOutcome out = run_task("fsig", read_data("an-p5-n1.toml"), opts);
    REQUIRE(out.exit_code == 0);
    Json doc = Json::parse(out.output);
    CHECK(doc["status"] == "ok");
    REQUIRE(doc["records"].size() == 3);
    CHECK(doc["records"][0]["length"] == 13);
    CHECK(doc["records"][0]["value"]["num"] == "13");
    CHECK(doc["records"][0]["value"]["den"] == "25");
    CHECK(doc["extrapolation"]["value"]["num"] == "1");
    CHECK(doc["extrapolation"]["value"]["den"] == "2");
}

TEST_CASE("byte determinism: identical inputs, identical output minus timing") {
    RunOptions opts;
    const std::string text = read_data("a1-curve-p5.toml");
    RunOutcome a = run_task("curve", text, opts);
    RunOutcome b = run_task("curve", text, opts);
    REQUIRE(a.exit_code == 0);
    CHECK(strip_timing(a.output).dump() == strip_timing(b.output).dump());

    // thread count must not affect output
    RunOptions threads1 = opts;
    threads1.threads = 1;
    RunOptions threads2 = opts;
    threads2.threads = 2;
    RunOutcome c = run_task("curve", text, threads1);
    RunOutcome d = run_task("curve", text, threads2);
    CHECK(strip_timing(c.output).dump() == strip_timing(d.output).dump());

    // CSV is deterministic end to end (no timing block at all)
    RunOptions csv = opts;
    csv.format = "csv";
    RunOutcome e = run_task("curve", text, csv);
    RunOutcome f = run_task("curve", text, csv);
    CHECK(e.output == f.output);
}

TEST_CASE("csv rendering") {
    RunOptions csv;
    csv.format = "csv";
    RunOutcome out = run_task("fsig", read_data("an-p5-n1.toml"), csv);
    REQUIRE(out.exit_code == 0);
    std::istringstream lines(out.output);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "kind,e,q,t,name,length,value,decimal,pass,detail");
    std::string row;
    std::getline(lines, row);
    CHECK(row.find("record,1,5,,s_e,13,13/25,0.520000000000") == 0);
    // extrapolated 1/2 renders as fraction plus decimal
    CHECK(out.output.find("extrap,,,,s,,1/2,0.500000000000") != std::string::npos);

    // an integer-valued fraction renders without a denominator
    RunOutcome reg = run_task("fsig", read_data("regular-p5-n3.toml"), csv);
    CHECK(reg.output.find("record,1,5,,s_e,125,1,1.000000000000") != std::string::npos);
}

TEST_CASE("exit code 1 on malformed input with diagnostics") {
    RunOptions opts;
    RunOutcome out = run_task("fsig", "[ring\np = 5", opts);
    CHECK(out.exit_code == 1);
    CHECK(out.diagnostics.find("line") != std::string::npos);
    Json doc = Json::parse(out.output);
    CHECK(doc["status"] == "error");
}

TEST_CASE("exit code 2 on a failing check") {
    // sabotage the cover inclusion: z -> u^2 breaks the relation
    std::string text = read_data("a1-cover-p5.toml");
    size_t at = text.find("z = \"u*s\"");
    REQUIRE(at != std::string::npos);
    text.replace(at, 9, "z = \"u^2\"");
    RunOptions opts;
    opts.emax = 1;
    RunOutcome out = run_task("verify-cover", text, opts);
    CHECK(out.exit_code == 2);
    Json doc = Json::parse(out.output);
    CHECK(doc["status"] == "check_failed");
    bool found = false;
    for (const auto& check : doc["checks"])
        if (check["name"] == "inclusion respects relations") {
            found = true;
            CHECK(check["pass"] == false);
        }
    CHECK(found);
}

TEST_CASE("exit code 1 on budget exhaustion with partial results flagged") {
    RunOptions opts;
    opts.budget = 50;  // too small for e = 2 on the quadric cone
    RunOutcome out = run_task("fsig", read_data("an-p5-n1.toml"), opts);
    CHECK(out.exit_code == 1);
    Json doc = Json::parse(out.output);
    CHECK(doc["status"] == "error");
    if (doc.contains("records") && !doc["records"].empty()) CHECK(doc["partial"] == true);
}

TEST_CASE("selftest command passes") {
    RunOptions opts;
    RunOutcome out = run_task("selftest", "", opts);
    CHECK(out.exit_code == 0);
    Json doc = Json::parse(out.output);
    for (const auto& check : doc["checks"]) CHECK(check["pass"] == true);
}

TEST_CASE("rounding and order flags") {
    RunOptions opts;
    opts.rounding = "q";
    RunOutcome out = run_task("fsig", read_data("regular-p3-n2.toml"), opts);
    CHECK(out.exit_code == 0);

    RunOptions lex;
    lex.order = "lex";
    lex.emax = 2;
    RunOutcome a = run_task("fsig", read_data("an-p5-n1.toml"), lex);
    RunOptions grev;
    grev.emax = 2;
    RunOutcome b = run_task("fsig", read_data("an-p5-n1.toml"), grev);
    REQUIRE(a.exit_code == 0);
    // lengths are order-independent
    Json da = strip_timing(a.output);
    Json db = strip_timing(b.output);
    CHECK(da["records"][1]["length"] == db["records"][1]["length"]);
    set_working_order(MonomialOrder::grevlex());

    RunOptions bad;
    bad.order = "weird";
    CHECK(run_task("fsig", read_data("regular-p2-n1.toml"), bad).exit_code == 1);
}

TEST_CASE("remaining shipped examples run clean") {
    RunOptions opts;
    for (const char* name : {"fpt-xy-p2.toml", "fpt-cusp-p5.toml", "a1-ratio-p5.toml",
                             "a1-diff-p5.toml", "regular-p2-n1.toml"}) {
        RunOutcome out = run_task("", read_data(name), opts);
        CHECK(out.exit_code == 0);
    }
}
