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

#ifndef FSIG_PROBLEM_HPP
#define FSIG_PROBLEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsig/covers.hpp"
#include "fsig/fsing.hpp"

namespace fsig {

/// Problem description parsed from a TOML-syntax file. Polynomials stay
/// textual here; rationals are exact integer pairs, never floating-point.
struct ProblemFile {
    // [ring]
    std::uint32_t p = 0;
    std::vector<std::string> vars;
    std::optional<std::string> quotient;
    std::optional<int> dimension;

    // [divisor.<name>]  components = [{poly, num, den}, ...]
    struct DivisorComponentSec {
        std::string poly;
        long long num = 0;
        long long den = 1;
    };
    std::map<std::string, std::vector<DivisorComponentSec>> divisors;

    // [pair]
    std::optional<std::string> delta_name;
    std::optional<std::string> d_name;
    std::string rounding = "qm1";

    // [base.<name>]
    struct BaseSec {
        std::vector<std::string> vars;
        std::map<std::string, std::string> reduce;  // ambient var -> polynomial text
    };
    std::map<std::string, BaseSec> bases;

    // [cover.<name>]
    struct CoverSec {
        std::vector<std::string> vars;
        std::optional<std::string> quotient;
        std::map<std::string, std::string> inclusion;  // base var -> polynomial text
        long long index = 1;
        std::string witness;
    };
    std::map<std::string, CoverSec> covers;

    // [task]
    std::string command;
    std::optional<long long> emax;
    std::optional<long long> e;
    std::optional<long long> r;
    std::optional<long long> sdim;
    std::vector<std::string> grid;          // exact rationals as "num/den" text
    std::optional<std::string> base;        // base presentation name (diff, adjoint-check)
    std::optional<std::string> base_prime;  // base presentation of D' (verify-cover)
    std::optional<std::string> cover;       // cover name (verify-cover)
    std::optional<std::string> g;           // element for fpt
    std::vector<std::string> ideal;         // generators for hk (defaults to the variables)
};

ProblemFile parse_problem(const std::string& text);

/// Library objects materialized from a problem file.
struct Workspace {
    RingPresentation pres;
    std::map<std::string, QDivisor> divisors;
    PairSpec pair;
    std::optional<QDivisor> divisor_d;
    std::map<std::string, BasePresentation> bases;
    std::map<std::string, CoverPresentation> covers;
};

Workspace build_workspace(const ProblemFile& pf);

Rational parse_rational_text(const std::string& text);

}  // namespace fsig

#endif
