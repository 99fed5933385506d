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

#include "fsig/fsing.hpp"

#include <algorithm>

namespace fsig {

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

long long ceil_scaled(const Rational& c, long long s) {
    if (c.num() < 0 || s < 0) fail(Errc::input, "negative value in exponent rounding");
    __int128 num = (__int128)c.num() * s;
    __int128 k = (num + c.den() - 1) / c.den();
    if (k > (__int128)1 << 62) fail(Errc::overflow, "rounded exponent too large");
    return (long long)k;
}

long long rounded_exponent(const Rational& coeff, long long q, Rounding mode) {
    return ceil_scaled(coeff, mode == Rounding::ceil_qm1 ? q - 1 : q);
}

unsigned long long quotient_length(const Ideal& J) {
    StaircaseCount sc = artinian_length(J);
    if (!sc.finite) fail(Errc::input, "quotient is not Artinian (infinite colength)");
    return sc.colength;
}

RingPresentation make_presentation(RingPtr ambient, std::optional<Polynomial> hypersurface,
                                   std::optional<int> dimension) {
    RingPresentation pres;
    pres.ambient = std::move(ambient);
    int computed = pres.ambient->nvars();
    if (hypersurface && !hypersurface->is_zero()) {
        require_same_ring(*pres.ambient, *hypersurface->ring());
        if (hypersurface->is_constant()) fail(Errc::input, "hypersurface must be a non-unit");
        pres.hypersurface = std::move(hypersurface);
        computed = krull_dimension(Ideal(pres.ambient, {*pres.hypersurface}));
    }
    if (dimension && *dimension != computed)
        fail(Errc::input, "declared dimension " + std::to_string(*dimension) +
                              " does not match computed dimension " + std::to_string(computed));
    pres.dimension = computed;
    return pres;
}

// --- degeneracy ideals ------------------------------------------------------

namespace {

void validate_divisor(const QDivisor& div, const Ring& ring) {
    for (const auto& comp : div.components) {
        require_same_ring(ring, *comp.g.ring());
        if (comp.g.is_zero()) fail(Errc::input, "divisor component is zero");
        if (comp.g.is_constant()) fail(Errc::input, "divisor component is a unit");
        if (comp.coeff < Rational(0)) fail(Errc::input, "divisor coefficient is negative");
    }
}

// Hypersurface colon chain: I_0 = m, I_{k+1} = (I_k^[p] : f^(p-1)), so that
// I_e = (m^[q] : f^(q-1)). Each returned ideal is regenerated from its
// reduced basis.
std::vector<Ideal> hypersurface_chain(const RingPresentation& pres, int e_max) {
    const RingPtr& S = pres.ambient;
    std::vector<Ideal> chain;
    Ideal current = Ideal::maximal(S);
    if (!pres.hypersurface) {
        for (int e = 1; e <= e_max; ++e) chain.push_back(frobenius_power_ideal(current, e));
        return chain;
    }
    Polynomial fp1 = pres.hypersurface->pow(S->p() - 1);
    for (int e = 1; e <= e_max; ++e) {
        Ideal J = colon_poly(frobenius_power_ideal(current, 1), fp1);
        J = Ideal(S, J.groebner());
        chain.push_back(J);
        current = chain.back();
    }
    return chain;
}

Ideal apply_divisor_factors(const PairSpec& pair, Ideal J, long long q,
                            std::optional<std::pair<Polynomial, long long>> extra) {
    validate_divisor(pair.delta, *pair.ring.ambient);
    for (const auto& comp : pair.delta.components) {
        long long k = rounded_exponent(comp.coeff, q, pair.rounding);
        if (k > 0) J = colon_poly(J, comp.g.pow((unsigned long long)k));
    }
    if (extra && extra->second > 0) {
        require_same_ring(*pair.ring.ambient, *extra->first.ring());
        if (extra->first.is_zero()) fail(Errc::input, "extra colon factor is zero");
        J = colon_poly(J, extra->first.pow((unsigned long long)extra->second));
    }
    return Ideal(pair.ring.ambient, J.groebner());
}

std::vector<Ideal> degeneracy_levels(const PairSpec& pair, int e_max) {
    std::vector<Ideal> chain = hypersurface_chain(pair.ring, e_max);
    long long q = 1;
    for (int e = 1; e <= e_max; ++e) {
        q = checked_mul(q, (long long)pair.ring.ambient->p());
        chain[(size_t)e - 1] = apply_divisor_factors(pair, chain[(size_t)e - 1], q, std::nullopt);
    }
    return chain;
}

}  // namespace

Rational extrapolate_last_two(const std::vector<Rational>& values, std::uint32_t p) {
    if (values.size() < 2) fail(Errc::input, "extrapolation needs at least two samples");
    const Rational& s_prev = values[values.size() - 2];
    const Rational& s_last = values.back();
    return s_last - (s_prev - s_last) / Rational((long long)p - 1);
}

Ideal degeneracy_ideal(const PairSpec& pair, int e,
                       std::optional<std::pair<Polynomial, long long>> extra) {
    if (e < 1) fail(Errc::input, "Frobenius level must be >= 1");
    long long q = pow_ll(pair.ring.ambient->p(), e);
    std::vector<Ideal> chain = hypersurface_chain(pair.ring, e);
    return apply_divisor_factors(pair, chain.back(), q, std::move(extra));
}

SplittingRecord splitting_length(const PairSpec& pair, int e) {
    SplittingRecord rec;
    rec.e = e;
    rec.q = pow_ll(pair.ring.ambient->p(), e);
    rec.ideal = degeneracy_ideal(pair, e);
    rec.length = quotient_length(rec.ideal);
    rec.s_e = Rational((long long)rec.length, pow_ll(rec.q, pair.ring.dimension));
    return rec;
}

FSignatureEstimate fsignature_estimate(const PairSpec& pair, int e_max) {
    if (e_max < 2) fail(Errc::input, "extrapolation needs e_max >= 2");
    FSignatureEstimate est;
    std::vector<Ideal> levels = degeneracy_levels(pair, e_max);
    std::vector<Rational> values;
    for (int e = 1; e <= e_max; ++e) {
        SplittingRecord rec;
        rec.e = e;
        rec.q = pow_ll(pair.ring.ambient->p(), e);
        rec.ideal = levels[(size_t)e - 1];
        rec.length = quotient_length(rec.ideal);
        rec.s_e = Rational((long long)rec.length, pow_ll(rec.q, pair.ring.dimension));
        values.push_back(rec.s_e);
        est.records.push_back(std::move(rec));
    }
    est.extrapolated = extrapolate_last_two(values, pair.ring.ambient->p());
    return est;
}

namespace {

void require_index_divisor(const QDivisor& D) {
    if (D.components.size() != 1 || D.components[0].coeff.num() != 1)
        fail(Errc::input, "D must be a single component (x, 1/m)");
}

}  // namespace

SignatureCurve signature_curve(const PairSpec& pair, const QDivisor& D, int e,
                               std::vector<Rational> grid) {
    require_index_divisor(D);
    const Polynomial& x = D.components[0].g;
    const long long m = D.components[0].coeff.den();
    SignatureCurve curve;
    curve.e = e;
    curve.q = pow_ll(pair.ring.ambient->p(), e);
    const long long qd = pow_ll(curve.q, pair.ring.dimension);

    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (const Rational& t : grid)
        if (t < Rational(0) || t > Rational(1)) fail(Errc::input, "grid value outside [0,1]");

    Ideal base = degeneracy_ideal(pair, e);
    curve.samples.resize(grid.size());

    // Independent cells; deterministic because results land by index.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < (long)grid.size(); ++idx) {
        const Rational& t = grid[(size_t)idx];
        long long k = rounded_exponent(Rational(t.num(), checked_mul(t.den(), m)), curve.q,
                                       pair.rounding);
        Ideal J = k > 0 ? colon_poly(base, x.pow((unsigned long long)k)) : base;
        CurveSample s;
        s.t = t;
        s.length = quotient_length(J);
        s.value = Rational((long long)s.length, qd);
        curve.samples[(size_t)idx] = std::move(s);
    }

    for (size_t i = 1; i < curve.samples.size(); ++i) {
        if (curve.samples[i].value > curve.samples[i - 1].value)
            fail(Errc::check, "signature curve is not non-increasing");
    }
    return curve;
}

Rational left_derivative_at_one(const PairSpec& pair, const QDivisor& D, int e, int r) {
    require_index_divisor(D);
    if (e < 1 || r < e) fail(Errc::input, "need 1 <= e <= r");
    const long long m = D.components[0].coeff.den();
    const long long pe = pow_ll(pair.ring.ambient->p(), e);
    if ((pe - 1) % m != 0)
        fail(Errc::input, "index " + std::to_string(m) + " does not divide p^e - 1 at e=" +
                              std::to_string(e));
    const Polynomial& x = D.components[0].g;
    const long long qr = pow_ll(pair.ring.ambient->p(), r);
    const long long qd = pow_ll(qr, pair.ring.dimension);

    // Exponents ceil(t q / m) at t = 1 - p^{-e} and t = 1.
    const long long k_near = (qr - qr / pe) / m;
    const long long k_one = (qr + m - 1) / m;

    Ideal base = degeneracy_ideal(pair, r);
    auto value_at = [&](long long k) {
        Ideal J = k > 0 ? colon_poly(base, x.pow((unsigned long long)k)) : base;
        return Rational((long long)quotient_length(J), qd);
    };
    Rational s_near = value_at(k_near);
    Rational s_one = value_at(k_one);
    return Rational(pe) * (s_one - s_near);
}

// --- the different ----------------------------------------------------------

BasePresentation make_base_presentation(const RingPresentation& pres,
                                        const std::vector<std::string>& base_vars,
                                        const std::vector<Polynomial>& ambient_images) {
    const RingPtr& S = pres.ambient;
    if ((int)ambient_images.size() != S->nvars())
        fail(Errc::input, "base presentation must give an image for every ambient variable");
    BasePresentation base;
    base.base_ring = make_ring(S->p(), base_vars);
    for (const auto& v : base_vars) {
        int idx = S->var_index(v);
        if (idx < 0) fail(Errc::input, "base variable '" + v + "' is not an ambient variable");
        base.base_var_in_ambient.push_back(idx);
    }
    for (const auto& img : ambient_images) require_same_ring(*base.base_ring, *img.ring());
    base.ambient_image = ambient_images;

    // Each base variable must reduce to itself.
    for (size_t i = 0; i < base_vars.size(); ++i) {
        const Polynomial expected = Polynomial::variable(base.base_ring, (int)i);
        if (!base.ambient_image[(size_t)base.base_var_in_ambient[i]].equals(expected))
            fail(Errc::input, "base variable '" + base_vars[i] + "' must reduce to itself");
    }
    // The hypersurface relation must vanish on the base.
    if (pres.hypersurface && !reduce_to_base(base, *pres.hypersurface).is_zero())
        fail(Errc::input, "base presentation inconsistent: hypersurface does not reduce to zero");
    return base;
}

Polynomial reduce_to_base(const BasePresentation& base, const Polynomial& ambient_poly) {
    Polynomial acc = Polynomial::zero(base.base_ring);
    for (const Term& t : ambient_poly.terms()) {
        Polynomial term = Polynomial::constant(base.base_ring, t.c);
        for (int i = 0; i < ambient_poly.ring()->nvars() && !term.is_zero(); ++i) {
            long long e = t.m.exp(i);
            if (e == 0) continue;
            term = term * base.ambient_image[(size_t)i].pow((unsigned long long)e);
        }
        acc = acc + term;
    }
    return acc;
}

namespace {

// Projection onto the dual-basis generator: keeps terms with all exponents
// congruent to q-1 mod q and divides the exponents; coefficients are fixed
// by Frobenius on the prime field.
Polynomial phi_project(const Polynomial& w, long long q) {
    std::vector<Term> out;
    const int n = w.ring()->nvars();
    for (const Term& t : w.terms()) {
        bool keep = true;
        Monomial m(n);
        for (int i = 0; i < n && keep; ++i) {
            long long a = t.m.exp(i);
            if (a % q != q - 1)
                keep = false;
            else
                m.set_exp(i, (a - (q - 1)) / q);
        }
        if (keep) out.push_back(Term{m, t.c});
    }
    return Polynomial::from_terms(w.ring(), std::move(out), w.order());
}

// phi on the base ring: same projection, used by the reconstruction check.
Polynomial phi_base(const Polynomial& w, long long q) { return phi_project(w, q); }

}  // namespace

DifferentResult different_hypersurface(const PairSpec& pair, const QDivisor& D, int e,
                                       const BasePresentation& base) {
    require_index_divisor(D);
    const RingPtr& S = pair.ring.ambient;
    const long long q = pow_ll(S->p(), e);
    const long long m = D.components[0].coeff.den();
    if ((q - 1) % m != 0)
        fail(Errc::input, "index " + std::to_string(m) + " does not divide p^e - 1");
    validate_divisor(pair.delta, *S);

    DifferentResult res;
    res.e = e;
    res.q = q;

    // The acting map: Phi^e(f^(q-1) * x^((q-1)/m) * prod g_i^round * -).
    Polynomial H = D.components[0].g.pow((unsigned long long)((q - 1) / m));
    if (pair.ring.hypersurface) H = H * pair.ring.hypersurface->power_q_minus_one(e);
    for (const auto& comp : pair.delta.components) {
        long long k = rounded_exponent(comp.coeff, q, pair.rounding);
        if (k > 0) H = H * comp.g.pow((unsigned long long)k);
    }

    const int k_base = base.base_ring->nvars();
    {
        // box size q^k_base must stay enumerable
        unsigned __int128 cells = 1;
        for (int i = 0; i < k_base; ++i) {
            cells *= (unsigned __int128)q;
            if (cells > (1u << 26)) fail(Errc::budget, "dual-basis box too large at this level");
        }
    }

    // Values of the induced map on the basis monomials y^alpha.
    std::vector<long long> alpha((size_t)k_base, 0);
    std::vector<std::pair<std::vector<long long>, Polynomial>> values;
    while (true) {
        Monomial lift(S->nvars());
        for (int i = 0; i < k_base; ++i)
            lift.set_exp(base.base_var_in_ambient[(size_t)i], alpha[(size_t)i]);
        Polynomial w = H.times_term(1, lift);
        Polynomial c = reduce_to_base(base, phi_project(w, q));
        if (!c.is_zero()) values.emplace_back(alpha, c);

        int pos = 0;
        while (pos < k_base && ++alpha[(size_t)pos] == q) alpha[(size_t)pos++] = 0;
        if (pos == k_base) break;
    }

    // Reconstruct h with phi(y^alpha) = c_alpha:
    // h = sum_alpha c_alpha^q * y^((q-1)*1 - alpha).
    std::vector<Term> hterms;
    for (const auto& [a, c] : values) {
        Monomial comp((int)k_base);
        for (int i = 0; i < k_base; ++i) comp.set_exp(i, q - 1 - a[(size_t)i]);
        for (const Term& t : c.frobenius_power(e).terms())
            hterms.push_back(Term{t.m.times(comp), t.c});
    }
    res.h = Polynomial::from_terms(base.base_ring, std::move(hterms));
    if (res.h.is_zero())
        fail(Errc::input, "induced map on the divisor is zero at this level (not F-pure along D)");

    // Divisor coefficients along coordinate hyperplanes: ord_v(h) / (q-1).
    res.coefficients_in_unit_range = true;
    Monomial content((int)k_base);
    for (int i = 0; i < k_base; ++i) {
        long long ord = -1;
        for (const Term& t : res.h.terms()) ord = ord < 0 ? t.m.exp(i) : std::min(ord, t.m.exp(i));
        content.set_exp(i, ord);
        Rational coeff(ord, q - 1);
        if (coeff < Rational(0) || coeff > Rational(1)) res.coefficients_in_unit_range = false;
        res.coefficients.emplace_back(base.base_ring->var_name(i), coeff);
    }
    res.residual = exact_divide(res.h, Polynomial::monomial(base.base_ring, content, 1));
    res.residual_is_unit = res.residual.is_unit();

    // Postcondition: the map built from h reproduces every recorded value.
    res.reconstruction_ok = true;
    for (const auto& [a, c] : values) {
        Monomial am((int)k_base);
        for (int i = 0; i < k_base; ++i) am.set_exp(i, a[(size_t)i]);
        if (!phi_base(res.h.times_term(1, am), q).equals(c)) {
            res.reconstruction_ok = false;
            break;
        }
    }
    if (!res.reconstruction_ok)
        fail(Errc::check, "different reconstruction identity failed");
    return res;
}

QDivisor different_as_divisor(const DifferentResult& diff, const BasePresentation& base) {
    QDivisor d;
    for (size_t i = 0; i < diff.coefficients.size(); ++i) {
        if (diff.coefficients[i].second.is_zero()) continue;
        d.components.push_back(
            QDivisorComponent{Polynomial::variable(base.base_ring, (int)i),
                              diff.coefficients[i].second});
    }
    return d;
}

// --- adjunction --------------------------------------------------------------

AdjunctionReport adjunction_check(const PairSpec& pair, const QDivisor& D,
                                  const BasePresentation& base, int e_max) {
    require_index_divisor(D);
    const std::uint32_t p = pair.ring.ambient->p();
    const long long m = D.components[0].coeff.den();
    const int d = pair.ring.dimension;

    int e0 = 0;
    for (int e = 1; e <= e_max; ++e)
        if ((pow_ll(p, e) - 1) % m == 0) {
            e0 = e;
            break;
        }
    if (e0 == 0)
        fail(Errc::input, "no level e <= e_max has m | p^e - 1; the different is not computable");

    AdjunctionReport report;
    report.different = different_hypersurface(pair, D, e0, base);

    PairSpec base_pair;
    base_pair.ring = make_presentation(base.base_ring, std::nullopt, std::nullopt);
    base_pair.delta = different_as_divisor(report.different, base);
    base_pair.rounding = pair.rounding;

    std::vector<Ideal> levels = degeneracy_levels(pair, e_max);

    for (int e = 1; e <= e_max; ++e) {
        AdjunctionLevel lvl;
        lvl.e = e;
        lvl.q = pow_ll(p, e);
        lvl.admissible = (lvl.q - 1) % m == 0;

        unsigned long long len = quotient_length(levels[(size_t)e - 1]);
        lvl.s_pair = Rational((long long)len, pow_ll(lvl.q, d));

        if (lvl.admissible) {
            lvl.slope = left_derivative_at_one(pair, D, e, e_max);

            // Route 1: splitting data of (O_D, Diff) on the base presentation.
            lvl.rhs_direct = splitting_length(base_pair, e).s_e;

            // Route 2: l(R/(I_e : x^((q-1)/m))) / p^(e(d-1)).
            Ideal J = colon_poly(levels[(size_t)e - 1],
                                 D.components[0].g.pow((unsigned long long)((lvl.q - 1) / m)));
            lvl.rhs_formula =
                Rational((long long)quotient_length(J), pow_ll(lvl.q, d - 1));

            bool exact_rounding = pair.rounding == Rounding::ceil_qm1;
            for (const auto& comp : base_pair.delta.components) {
                if ((__int128)comp.coeff.num() * (lvl.q - 1) % comp.coeff.den() != 0)
                    exact_rounding = false;
            }
            if (report.different.residual_is_unit && exact_rounding) {
                lvl.rhs_agree = *lvl.rhs_direct == *lvl.rhs_formula;
                if (!lvl.rhs_agree) report.all_ok = false;
            }

            const Rational rhs = *lvl.rhs_formula;
            const Rational tol = tolerances::corollary(lvl.q);
            lvl.corollary_ok = lvl.s_pair >= rhs - tol;
            lvl.equality_case = (lvl.s_pair - rhs).abs() <= tol;
            if (!lvl.corollary_ok) report.all_ok = false;
        }
        report.levels.push_back(std::move(lvl));
    }
    return report;
}

// --- Hilbert-Kunz, F-pure threshold, splitting ratio -------------------------

namespace {

Ideal with_hypersurface(const RingPresentation& pres, Ideal J) {
    if (pres.hypersurface) J = ideal_sum(J, Ideal(pres.ambient, {*pres.hypersurface}));
    return J;
}

}  // namespace

LevelValue hilbert_kunz_level(const RingPresentation& pres, const Ideal& I, int e) {
    require_same_ring(*pres.ambient, *I.ring());
    if (!I.has_generators()) fail(Errc::input, "Hilbert-Kunz input ideal is zero");
    LevelValue rec;
    rec.e = e;
    rec.q = pow_ll(pres.ambient->p(), e);
    rec.length = quotient_length(with_hypersurface(pres, frobenius_power_ideal(I, e)));
    rec.value = Rational((long long)rec.length, pow_ll(rec.q, pres.dimension));
    return rec;
}

HKEstimate hilbert_kunz(const RingPresentation& pres, const Ideal& I, int e_max) {
    if (e_max < 1) fail(Errc::input, "need e_max >= 1");
    require_same_ring(*pres.ambient, *I.ring());
    if (!I.has_generators()) fail(Errc::input, "Hilbert-Kunz input ideal is zero");
    {
        StaircaseCount probe = artinian_length(with_hypersurface(pres, I));
        if (!probe.finite) fail(Errc::input, "ideal is not Artinian-cofinite on the presentation");
    }

    HKEstimate est;
    std::vector<Rational> values;
    for (int e = 1; e <= e_max; ++e) {
        LevelValue rec = hilbert_kunz_level(pres, I, e);
        values.push_back(rec.value);
        est.records.push_back(std::move(rec));
    }
    est.extrapolated = values.size() >= 2 ? extrapolate_last_two(values, pres.ambient->p())
                                          : values.back();
    return est;
}

FptRecord fpt_level(const RingPresentation& pres, const Polynomial& g, int e) {
    require_same_ring(*pres.ambient, *g.ring());
    if (g.is_zero()) fail(Errc::input, "fpt input is zero");
    for (const Term& t : g.terms())
        if (t.m.is_one()) fail(Errc::input, "fpt input must lie in the maximal ideal");

    const int n = pres.ambient->nvars();
    FptRecord rec;
    rec.e = e;
    rec.q = pow_ll(pres.ambient->p(), e);
    Ideal mq = frobenius_power_ideal(Ideal::maximal(pres.ambient), e);
    Polynomial scale = pres.hypersurface ? pres.hypersurface->power_q_minus_one(e)
                                         : Polynomial::constant(pres.ambient, 1);
    auto outside = [&](long long k) {
        return !mq.contains(scale * g.pow((unsigned long long)k));
    };
    if (!outside(0)) {
        rec.nu = -1;  // not F-pure at this level
        rec.ratio = Rational(0);
    } else {
        long long lo = 0, hi = checked_mul((long long)n, rec.q - 1) + 1;
        while (hi - lo > 1) {  // outside(lo), !outside(hi)
            long long mid = lo + (hi - lo) / 2;
            (outside(mid) ? lo : hi) = mid;
        }
        rec.nu = lo;
        rec.ratio = Rational(lo, rec.q);
    }
    return rec;
}

std::vector<FptRecord> fpt_estimate(const RingPresentation& pres, const Polynomial& g,
                                    int e_max) {
    std::vector<FptRecord> out;
    for (int e = 1; e <= e_max; ++e) out.push_back(fpt_level(pres, g, e));
    return out;
}

std::vector<LevelValue> splitting_ratio_estimate(const PairSpec& pair, int splitting_dimension,
                                                 int e_max) {
    if (splitting_dimension < 0 || splitting_dimension > pair.ring.ambient->nvars())
        fail(Errc::input, "splitting dimension out of range");
    std::vector<Ideal> levels = degeneracy_levels(pair, e_max);
    std::vector<LevelValue> out;
    for (int e = 1; e <= e_max; ++e) {
        LevelValue rec;
        rec.e = e;
        rec.q = pow_ll(pair.ring.ambient->p(), e);
        rec.length = quotient_length(levels[(size_t)e - 1]);
        rec.value = Rational((long long)rec.length, pow_ll(rec.q, splitting_dimension));
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace fsig
