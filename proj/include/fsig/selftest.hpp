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

#ifndef FSIG_SELFTEST_HPP
#define FSIG_SELFTEST_HPP

#include <random>
#include <string>
#include <vector>

#include "fsig/polynomial.hpp"

namespace fsig {

struct SelftestResult {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_passed = true;
};

/// Fast built-in invariant suite: monomial-order laws, Frobenius as a ring
/// map, q-1 power agreement, parse/print round trips, the colon length
/// identity on random Artinian ideals, and basis determinism.
SelftestResult run_selftest();

/// Shared random generator for property-style suites; deterministic seeds.
Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int max_terms,
                             long long max_exp);

}  // namespace fsig

#endif
