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

#include "fsig/covers.hpp"

namespace fsig {

Polynomial map_to_cover(const CoverPresentation& cover, const Polynomial& base_poly) {
    const RingPtr& C = cover.cover_ring.ambient;
    if ((int)cover.inclusion.size() != base_poly.ring()->nvars())
        fail(Errc::input, "inclusion must give an image for every base variable");
    Polynomial acc = Polynomial::zero(C);
    for (const Term& t : base_poly.terms()) {
        Polynomial term = Polynomial::constant(C, t.c);
        for (int i = 0; i < base_poly.ring()->nvars() && !term.is_zero(); ++i) {
            long long e = t.m.exp(i);
            if (e == 0) continue;
            term = term * cover.inclusion[(size_t)i].pow((unsigned long long)e);
        }
        acc = acc + term;
    }
    return acc;
}

Ideal symbolic_power(const RingPresentation& pres, const Ideal& P, int i,
                     const Polynomial& witness) {
    if (i < 1) fail(Errc::input, "symbolic power needs i >= 1");
    require_same_ring(*pres.ambient, *P.ring());
    require_same_ring(*pres.ambient, *witness.ring());

    Ideal quotient_P = P;
    if (pres.hypersurface)
        quotient_P = ideal_sum(P, Ideal(pres.ambient, {*pres.hypersurface}));
    if (quotient_P.contains(witness)) fail(Errc::input, "witness element lies in P");

    Ideal power = P;
    for (int k = 1; k < i; ++k) power = ideal_product(power, P);
    if (pres.hypersurface)
        power = ideal_sum(power, Ideal(pres.ambient, {*pres.hypersurface}));
    return saturation(power, witness);
}

namespace {

// a == unit * b modulo nothing (both already reduced).
bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const Ring& ring = *a.ring();
    std::uint32_t scale = ring.fmul(a.lead_coeff(), ring.finv(b.lead_coeff()));
    return a.equals(b.scaled(scale));
}

Polynomial cover_normal_form(const CoverPresentation& cover, const Polynomial& f) {
    if (!cover.cover_ring.hypersurface) return f;
    return normal_form(f, Ideal(cover.cover_ring.ambient, {*cover.cover_ring.hypersurface}));
}

}  // namespace

CoverReport verify_cover(const CoverPresentation& cover, const PairSpec& pair, const QDivisor& D,
                         int e_max) {
    if (D.components.size() != 1)
        fail(Errc::input, "D must be a single component (x, 1/m)");
    CoverReport report;

    // Relations: the base hypersurface must map to zero in the cover.
    report.inclusion_ok = true;
    if (pair.ring.hypersurface)
        report.inclusion_ok = cover_normal_form(cover, map_to_cover(cover, *pair.ring.hypersurface))
                                  .is_zero();

    // Cartier witness: u^m equals a unit times the image of x.
    Polynomial um = cover_normal_form(
        cover, cover.cartier_witness.pow((unsigned long long)cover.index));
    Polynomial img_x = cover_normal_form(cover, map_to_cover(cover, D.components[0].g));
    report.witness_ok = proportional(um, img_x);

    PairSpec cover_pair;
    cover_pair.ring = cover.cover_ring;
    cover_pair.rounding = pair.rounding;
    for (const auto& comp : pair.delta.components)
        cover_pair.delta.components.push_back(
            QDivisorComponent{map_to_cover(cover, comp.g), comp.coeff});

    for (int e = 1; e <= e_max; ++e) {
        CoverLevel lvl;
        lvl.e = e;
        lvl.q = pow_ll(pair.ring.ambient->p(), e);
        lvl.s_base = splitting_length(pair, e).s_e;
        lvl.s_cover = splitting_length(cover_pair, e).s_e;
        lvl.m_times_base = Rational(cover.index) * lvl.s_base;
        lvl.gap = (lvl.m_times_base - lvl.s_cover).abs();
        report.levels.push_back(std::move(lvl));
    }

    report.all_ok = report.inclusion_ok && report.witness_ok;
    return report;
}

CoverDifferentReport verify_cover_different(const CoverPresentation& cover, const PairSpec& pair,
                                            const QDivisor& D, const BasePresentation& base_D,
                                            const BasePresentation& base_Dprime, int e) {
    CoverDifferentReport report;
    const long long m = cover.index;

    report.diff_base = different_hypersurface(pair, D, e, base_D);
    PairSpec base_pair;
    base_pair.ring = make_presentation(base_D.base_ring, std::nullopt, std::nullopt);
    base_pair.delta = different_as_divisor(report.diff_base, base_D);
    base_pair.rounding = pair.rounding;
    Rational s_base = splitting_length(base_pair, e).s_e;

    PairSpec cover_pair;
    cover_pair.ring = cover.cover_ring;
    cover_pair.rounding = pair.rounding;
    for (const auto& comp : pair.delta.components)
        cover_pair.delta.components.push_back(
            QDivisorComponent{map_to_cover(cover, comp.g), comp.coeff});
    QDivisor Dprime;
    Dprime.components.push_back(QDivisorComponent{cover.cartier_witness, Rational(1, 1)});

    report.diff_cover = different_hypersurface(cover_pair, Dprime, e, base_Dprime);
    PairSpec prime_pair;
    prime_pair.ring = make_presentation(base_Dprime.base_ring, std::nullopt, std::nullopt);
    prime_pair.delta = different_as_divisor(report.diff_cover, base_Dprime);
    prime_pair.rounding = pair.rounding;
    Rational s_prime = splitting_length(prime_pair, e).s_e;

    report.lhs = Rational(m) * s_base;
    report.rhs = s_prime;
    report.gap = (report.lhs - report.rhs).abs();
    report.ok = report.gap <= Rational(1, pow_ll(pair.ring.ambient->p(), e));
    return report;
}

}  // namespace fsig
