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

#ifndef FSIG_COVERS_HPP
#define FSIG_COVERS_HPP

#include "fsig/fsing.hpp"

namespace fsig {

/// User-supplied presentation of a degree-m cyclic cover: the cover ring,
/// the inclusion of the base ring, the index m, and an element u whose
/// divisor is the pullback of D (so u^m is a unit times the image of x,
/// where mD = div(x)). The tool verifies the presentation; it does not
/// construct one.
struct CoverPresentation {
    RingPresentation cover_ring;
    std::vector<Polynomial> inclusion;  // image in the cover of each base ambient variable
    long long index = 1;
    Polynomial cartier_witness;
};

/// Substitution along the inclusion map.
Polynomial map_to_cover(const CoverPresentation& cover, const Polynomial& base_poly);

/// Symbolic power via a witness element: saturation(P^i + (f), s). Correct
/// when s lies in every associated prime of P^i other than P.
Ideal symbolic_power(const RingPresentation& pres, const Ideal& P, int i,
                     const Polynomial& witness);

struct CoverLevel {
    int e = 0;
    long long q = 0;
    Rational s_base;
    Rational s_cover;
    Rational m_times_base;
    Rational gap;  // |m * s_e(base) - s_e(cover)|
};

struct CoverReport {
    bool inclusion_ok = false;  // base hypersurface maps to zero in the cover
    bool witness_ok = false;    // u^m is a unit times the image of x
    std::vector<CoverLevel> levels;
    bool all_ok = false;
};

/// Checks the presentation and compares m * s_e(R, Delta) against
/// s_e(C(D), pulled-back Delta) level by level. Presentation failures are
/// reported, not fatal to the remaining checks.
CoverReport verify_cover(const CoverPresentation& cover, const PairSpec& pair, const QDivisor& D,
                         int e_max);

struct CoverDifferentReport {
    DifferentResult diff_base;
    DifferentResult diff_cover;
    Rational lhs;  // m * s_e(D, Diff_D(Delta))
    Rational rhs;  // s_e(D', Diff_D'(pulled Delta))
    Rational gap;
    bool ok = false;  // gap within 1/p^e
};

/// Computes both differents and both signature values and compares
/// m * s_e(D, Diff_D(Delta)) with s_e(D', Diff_D'(pullback Delta)), where
/// D' = div(cartier_witness) is Cartier on the cover.
CoverDifferentReport verify_cover_different(const CoverPresentation& cover, const PairSpec& pair,
                                            const QDivisor& D, const BasePresentation& base_D,
                                            const BasePresentation& base_Dprime, int e);

}  // namespace fsig

#endif
