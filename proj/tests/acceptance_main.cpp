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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the binary
// exits non-zero if any selected criterion fails. Run with no arguments for
// all criteria, or pass indices (1-9).

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fsig/covers.hpp"
#include "fsig/fsing.hpp"
#include "fsig/selftest.hpp"
#include "macaulay_oracle.hpp"

using namespace fsig;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Polynomial pp(const std::string& s, const RingPtr& R) { return parse_polynomial(s, R); }

PairSpec quadric_pair(std::uint32_t p, int n) {
    RingPtr S = make_ring(p, {"x", "y", "z"});
    PairSpec pair;
    pair.ring = make_presentation(S, pp("x*y - z^" + std::to_string(n + 1), S));
    return pair;
}

QDivisor index_divisor(const PairSpec& pair, long long m) {
    QDivisor d;
    d.components.push_back(QDivisorComponent{pp("x", pair.ring.ambient), Rational(1, m)});
    return d;
}

BasePresentation y_axis_base(const PairSpec& pair) {
    RingPtr base_ring = make_ring(pair.ring.ambient->p(), {"y"});
    return make_base_presentation(pair.ring, {"y"},
                                  {Polynomial::zero(base_ring),
                                   Polynomial::variable(base_ring, 0),
                                   Polynomial::zero(base_ring)});
}

struct Criterion {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

// 1. Regular-ring exactness: s_e = 1 exactly for p in {2,3,5}, N in {1,2,3},
//    e <= 3, in under a second.
Criterion criterion1() {
    Criterion c;
    auto t0 = Clock::now();
    int cases = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int N = 1; N <= 3; ++N) {
            std::vector<std::string> vars;
            for (int i = 0; i < N; ++i) vars.push_back(std::string(1, (char)('x' + i)));
            PairSpec pair;
            pair.ring = make_presentation(make_ring(p, vars), std::nullopt);
            for (int e = 1; e <= 3; ++e) {
                SplittingRecord rec = splitting_length(pair, e);
                c.require(rec.s_e == Rational(1),
                          "s_e != 1 at p=" + std::to_string(p) + " N=" + std::to_string(N) +
                              " e=" + std::to_string(e));
                c.require(rec.length == (unsigned long long)pow_ll(rec.q, N),
                          "length != q^N");
                ++cases;
            }
        }
    }
    double dt = seconds_since(t0);
    c.require(dt < 1.0, "runtime " + std::to_string(dt) + "s exceeds 1s");
    c.note(std::to_string(cases) + " cases exact in " + std::to_string(dt) + "s");
    return c;
}

// 2. F-signature of the quadric family: extrapolation within 0.01 of
//    1/(n+1), raw s_3 within 0.05, lengths at e <= 2 confirmed by the
//    linear-algebra oracle, under 60 s per case.
Criterion criterion2() {
    Criterion c;
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 2}}) {
        auto t0 = Clock::now();
        PairSpec pair = quadric_pair(p, n);
        FSignatureEstimate est = fsignature_estimate(pair, 3);
        Rational target(1, n + 1);
        c.require((est.extrapolated - target).abs() <= tolerances::fsig_extrapolation(),
                  "extrapolation off at p=" + std::to_string(p));
        c.require((est.records[2].s_e - target).abs() <= tolerances::raw_value(),
                  "raw s_3 off at p=" + std::to_string(p));
        for (int e = 1; e <= 2; ++e) {
            unsigned long long oracle = fsig_oracle::colon_colength_oracle(
                pair.ring.ambient, pow_ll((long long)p, e),
                pair.ring.hypersurface->power_q_minus_one(e));
            c.require(est.records[(size_t)e - 1].length == oracle,
                      "oracle mismatch at p=" + std::to_string(p) + " e=" + std::to_string(e));
        }
        double dt = seconds_since(t0);
        c.require(dt < 60.0, "runtime exceeds 60s at p=" + std::to_string(p));
        c.note("p=" + std::to_string(p) + ": s_3=" + est.records[2].s_e.to_string() +
               ", extrap=" + est.extrapolated.to_string() + ", " + std::to_string(dt) + "s");
    }
    return c;
}

// 3. Signature-curve linearity on the quadric cone at e=2.
Criterion criterion3() {
    Criterion c;
    PairSpec pair = quadric_pair(5, 1);
    QDivisor D = index_divisor(pair, 2);
    SignatureCurve curve = signature_curve(
        pair, D, 2, {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)});
    Rational maxdev(0);
    for (size_t i = 0; i < curve.samples.size(); ++i) {
        Rational target = (Rational(1) - curve.samples[i].t) / Rational(2);
        Rational dev = (curve.samples[i].value - target).abs();
        if (dev > maxdev) maxdev = dev;
        if (i > 0)
            c.require(curve.samples[i].value <= curve.samples[i - 1].value,
                      "curve increases at sample " + std::to_string(i));
    }
    c.require(maxdev <= tolerances::curve_deviation(curve.q), "max deviation too large");
    c.note("max |s_e(t) - (1-t)/2| = " + maxdev.to_string() + " <= " +
           tolerances::curve_deviation(curve.q).to_string());
    return c;
}

// 4. Different exactness: coefficient n/(n+1) exactly with unit residual;
//    the Cartier control case gives a zero different.
Criterion criterion4() {
    Criterion c;
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 2}}) {
        PairSpec pair = quadric_pair(p, n);
        QDivisor D = index_divisor(pair, n + 1);
        DifferentResult diff = different_hypersurface(pair, D, 1, y_axis_base(pair));
        c.require(diff.coefficients.size() == 1 &&
                      diff.coefficients[0].second == Rational(n, n + 1),
                  "coefficient != n/(n+1) at p=" + std::to_string(p));
        c.require(diff.residual_is_unit, "residual not a unit at p=" + std::to_string(p));
        c.require(diff.reconstruction_ok, "reconstruction failed");
        c.note("p=" + std::to_string(p) + ": coeff " + diff.coefficients[0].second.to_string());
    }
    // control: Cartier divisor in a regular (hence Gorenstein) ambient
    RingPtr S = make_ring(5, {"x", "y"});
    PairSpec plane;
    plane.ring = make_presentation(S, std::nullopt);
    QDivisor D;
    D.components.push_back(QDivisorComponent{pp("x", S), Rational(1, 1)});
    RingPtr base_ring = make_ring(5, {"y"});
    BasePresentation base = make_base_presentation(
        plane.ring, {"y"}, {Polynomial::zero(base_ring), Polynomial::variable(base_ring, 0)});
    DifferentResult control = different_hypersurface(plane, D, 1, base);
    c.require(control.h.is_unit() && control.coefficients[0].second == Rational(0),
              "Cartier control case is not the zero different");
    c.note("Cartier control: zero different");
    return c;
}

// 5. Main-theorem slope at (e,r) = (3,3) on the quadric cone, with exact
//    agreement of the two divisor-side routes at every admissible level.
Criterion criterion5() {
    Criterion c;
    PairSpec pair = quadric_pair(5, 1);
    QDivisor D = index_divisor(pair, 2);
    Rational slope = left_derivative_at_one(pair, D, 3, 3);
    c.require((slope - Rational(-1, 2)).abs() <= tolerances::slope(),
              "slope " + slope.to_string() + " not within 1/20 of -1/2");
    AdjunctionReport rep = adjunction_check(pair, D, y_axis_base(pair), 3);
    for (const auto& lvl : rep.levels) {
        if (!lvl.admissible) continue;
        c.require(lvl.rhs_direct.has_value() && lvl.rhs_formula.has_value() &&
                      *lvl.rhs_direct == *lvl.rhs_formula,
                  "rhs routes differ at e=" + std::to_string(lvl.e));
    }
    c.note("slope = " + slope.to_string() + ", rhs routes equal at e=1..3");
    return c;
}

// 6. Corollary inequality s_e(R,Delta) >= rhs - 2/p^e at the largest level
//    on every shipped pair; the quadric family flags the equality case.
Criterion criterion6() {
    Criterion c;

    struct Case {
        std::string name;
        PairSpec pair;
        QDivisor D;
        BasePresentation base;
        int e_max;
        bool expect_equality;
    };
    std::vector<Case> cases;
    {
        PairSpec a1 = quadric_pair(5, 1);
        cases.push_back({"quadric n=1 p=5", a1, index_divisor(a1, 2), y_axis_base(a1), 3, true});
        PairSpec a2 = quadric_pair(7, 2);
        cases.push_back({"quadric n=2 p=7", a2, index_divisor(a2, 3), y_axis_base(a2), 2, true});

        RingPtr S = make_ring(5, {"x", "y"});
        PairSpec plane;
        plane.ring = make_presentation(S, std::nullopt);
        QDivisor D;
        D.components.push_back(QDivisorComponent{pp("x", S), Rational(1, 1)});
        RingPtr base_ring = make_ring(5, {"y"});
        BasePresentation base = make_base_presentation(
            plane.ring, {"y"},
            {Polynomial::zero(base_ring), Polynomial::variable(base_ring, 0)});
        cases.push_back({"regular plane", plane, D, base, 3, true});

        PairSpec halfline = plane;
        halfline.delta.components.push_back(QDivisorComponent{pp("y", S), Rational(1, 2)});
        cases.push_back({"plane with half divisor", halfline, D, base, 3, true});
    }

    for (const auto& cs : cases) {
        AdjunctionReport rep = adjunction_check(cs.pair, cs.D, cs.base, cs.e_max);
        const AdjunctionLevel* last = nullptr;
        for (const auto& lvl : rep.levels)
            if (lvl.admissible) last = &lvl;
        c.require(last != nullptr, cs.name + ": no admissible level");
        if (!last) continue;
        c.require(last->corollary_ok, cs.name + ": corollary inequality fails");
        if (cs.expect_equality)
            c.require(last->equality_case, cs.name + ": equality case not flagged");
        c.note(cs.name + ": s=" + last->s_pair.to_string() + " vs rhs=" +
               last->rhs_formula->to_string() + (last->equality_case ? " (equality case)" : ""));
    }
    return c;
}

// 7. Cyclic-cover transformation on the quadric cone: exact relation checks,
//    gap |2 s_e - 1| within 0.1 at e=3 and shrinking from e=2, and the
//    different comparison across the cover.
Criterion criterion7() {
    Criterion c;
    PairSpec pair = quadric_pair(5, 1);
    QDivisor D = index_divisor(pair, 2);

    CoverPresentation cover;
    RingPtr C = make_ring(5, {"u", "s"});
    cover.cover_ring = make_presentation(C, std::nullopt);
    cover.inclusion = {pp("u^2", C), pp("s^2", C), pp("u*s", C)};
    cover.index = 2;
    cover.cartier_witness = pp("u", C);

    CoverReport rep = verify_cover(cover, pair, D, 3);
    c.require(rep.inclusion_ok, "inclusion check failed");
    c.require(rep.witness_ok, "witness check failed");
    c.require(rep.levels[2].gap <= tolerances::cover_gap(), "gap at e=3 too large");
    c.require(rep.levels[2].gap <= rep.levels[1].gap, "gap not decreasing from e=2");
    c.note("gaps: " + rep.levels[0].gap.to_string() + ", " + rep.levels[1].gap.to_string() +
           ", " + rep.levels[2].gap.to_string());

    RingPtr prime_ring = make_ring(5, {"s"});
    BasePresentation base_Dprime = make_base_presentation(
        cover.cover_ring, {"s"},
        {Polynomial::zero(prime_ring), Polynomial::variable(prime_ring, 0)});
    CoverDifferentReport dr =
        verify_cover_different(cover, pair, D, y_axis_base(pair), base_Dprime, 2);
    c.require(dr.diff_base.coefficients[0].second == Rational(1, 2),
              "base different is not 1/2");
    c.require(dr.diff_cover.coefficients[0].second == Rational(0),
              "cover different is not zero");
    c.require(dr.ok, "different comparison gap " + dr.gap.to_string() + " too large");
    c.note("m*s(D,Diff)=" + dr.lhs.to_string() + " vs s(D',Diff')=" + dr.rhs.to_string());
    return c;
}

// 8. Hilbert-Kunz: quadric cone toward 3/2 (oracle-confirmed at e <= 2) and
//    exact regular-ring values.
Criterion criterion8() {
    Criterion c;
    PairSpec pair = quadric_pair(5, 1);
    HKEstimate est = hilbert_kunz(pair.ring, Ideal::maximal(pair.ring.ambient), 3);
    c.require((est.extrapolated - Rational(3, 2)).abs() <= tolerances::raw_value(),
              "extrapolation " + est.extrapolated.to_string() + " not within 1/20 of 3/2");
    for (int e = 1; e <= 2; ++e) {
        unsigned long long oracle = fsig_oracle::sum_colength_oracle(
            pair.ring.ambient, pow_ll(5, e), {*pair.ring.hypersurface});
        c.require(est.records[(size_t)e - 1].length == oracle,
                  "oracle mismatch at e=" + std::to_string(e));
    }
    c.note("e_HK extrapolation = " + est.extrapolated.to_string());

    for (std::uint32_t p : {2u, 3u, 5u}) {
        RingPtr S = make_ring(p, {"x", "y"});
        RingPresentation pres = make_presentation(S, std::nullopt);
        HKEstimate reg = hilbert_kunz(pres, Ideal::maximal(S), 2);
        for (const auto& rec : reg.records)
            c.require(rec.value == Rational(1), "regular e_HK != 1 at p=" + std::to_string(p));
    }
    c.note("regular rings exact");
    return c;
}

// 9. Property suites: the two length identities on 100+ random Artinian
//    ideals, Frobenius-colon containment, basis determinism/idempotence,
//    and rounding-mode consistency, all inside five minutes.
Criterion criterion9() {
    Criterion c;
    auto t0 = Clock::now();
    std::mt19937_64 rng(4242);

    // (a) colon length identity and iterated-power identity
    int identity_cases = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int nv = 2; nv <= 3; ++nv) {
            RingPtr R = nv == 2 ? make_ring(p, {"x", "y"}) : make_ring(p, {"x", "y", "z"});
            std::uniform_int_distribution<long long> expd(1, 4);
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<Polynomial> gens;
                for (int i = 0; i < nv; ++i)
                    gens.push_back(Polynomial::variable(R, i).pow((unsigned long long)expd(rng)));
                Polynomial extra = random_polynomial(rng, R, trial % 2 ? 2 : 1, 3);
                if (!extra.is_zero()) gens.push_back(extra);
                Ideal J(R, gens);
                Polynomial g = random_polynomial(rng, R, 2, 3);
                if (g.is_zero()) continue;

                unsigned long long lj = artinian_length(J).colength;
                unsigned long long lc = artinian_length(colon_poly(J, g)).colength;
                unsigned long long ls = artinian_length(ideal_sum(J, Ideal(R, {g}))).colength;
                c.require(lc == lj - ls, "colon length identity failed");
                ++identity_cases;

                if (g.is_constant()) continue;
                unsigned long long l_g = ls;
                for (int n = 2; n <= 3; ++n) {
                    unsigned long long lhs =
                        artinian_length(ideal_sum(J, Ideal(R, {g.pow((unsigned)n)}))).colength;
                    long long rhs = (long long)n * (long long)l_g;
                    for (int i = 1; i < n; ++i) {
                        Ideal up = colon_poly(ideal_sum(J, Ideal(R, {g.pow((unsigned)i + 1)})),
                                              g.pow((unsigned)i));
                        rhs -= (long long)l_g - (long long)artinian_length(up).colength;
                    }
                    c.require((long long)lhs == rhs, "iterated-power identity failed");
                    ++identity_cases;
                }
            }
        }
    }
    c.require(identity_cases >= 100,
              "only " + std::to_string(identity_cases) + " identity cases");

    // (b) Frobenius-colon containment on degeneracy ideals, e < r <= 3
    for (std::uint32_t p : {3u, 5u}) {
        PairSpec pair = quadric_pair(p, 1);
        Polynomial x = pp("x", pair.ring.ambient);
        std::vector<Ideal> levels;
        for (int e = 1; e <= 3; ++e) levels.push_back(degeneracy_ideal(pair, e));
        for (int e = 1; e <= 3; ++e)
            for (int r = e + 1; r <= 3; ++r) {
                Ideal lhs = frobenius_power_ideal(colon_poly(levels[(size_t)e - 1], x), r - e);
                Ideal rhs = colon_poly(levels[(size_t)r - 1],
                                       x.pow((unsigned long long)pow_ll(p, r - e)));
                c.require(rhs.contains_ideal(lhs),
                          "containment failed at p=" + std::to_string(p) +
                              " e=" + std::to_string(e) + " r=" + std::to_string(r));
            }
    }

    // (c) determinism and idempotence of reduced bases
    for (int trial = 0; trial < 8; ++trial) {
        RingPtr R = make_ring(5, {"x", "y", "z"});
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_polynomial(rng, R, 3, 3));
        auto b1 = buchberger(R, gens, MonomialOrder::grevlex());
        auto b2 = buchberger(R, gens, MonomialOrder::grevlex());
        auto b3 = buchberger(R, b1, MonomialOrder::grevlex());
        c.require(b1.size() == b2.size() && b1.size() == b3.size(), "basis sizes differ");
        for (size_t i = 0; i < b1.size(); ++i) {
            c.require(b1[i].to_string() == b2[i].to_string(), "determinism failed");
            c.require(b1[i].to_string() == b3[i].to_string(), "idempotence failed");
        }
    }

    // (d) rounding-mode consistency on a divisor pair
    {
        RingPtr S = make_ring(5, {"x", "y"});
        PairSpec qm1;
        qm1.ring = make_presentation(S, std::nullopt);
        qm1.delta.components.push_back(QDivisorComponent{pp("y", S), Rational(1, 2)});
        PairSpec qmode = qm1;
        qmode.rounding = Rounding::ceil_q;
        std::vector<Rational> va, vb;
        for (int e = 1; e <= 3; ++e) {
            SplittingRecord ra = splitting_length(qm1, e);
            SplittingRecord rb = splitting_length(qmode, e);
            va.push_back(ra.s_e);
            vb.push_back(rb.s_e);
            long long dk = rounded_exponent(Rational(1, 2), ra.q, Rounding::ceil_q) -
                           rounded_exponent(Rational(1, 2), ra.q, Rounding::ceil_qm1);
            unsigned long long step =
                artinian_length(
                    ideal_sum(ra.ideal, Ideal(S, {pp("y", S).pow((unsigned long long)dk)})))
                    .colength;
            c.require((ra.s_e - rb.s_e).abs() <=
                          Rational((long long)step, pow_ll(ra.q, qm1.ring.dimension)),
                      "mode gap exceeds one colon step at e=" + std::to_string(e));
        }
        Rational ea = extrapolate_last_two(va, 5), eb = extrapolate_last_two(vb, 5);
        Rational res_a = (va.back() - ea).abs(), res_b = (vb.back() - eb).abs();
        Rational res = res_a > res_b ? res_a : res_b;
        c.require((ea - eb).abs() <= Rational(2) * res,
                  "mode extrapolations disagree beyond twice the residual");
    }

    double dt = seconds_since(t0);
    c.require(dt < 300.0, "suite runtime " + std::to_string(dt) + "s exceeds 5 minutes");
    c.note(std::to_string(identity_cases) + " identity cases, " + std::to_string(dt) + "s");
    return c;
}

const char* kNames[9] = {
    "regular-ring exactness",
    "quadric-family F-signature with oracle confirmation",
    "signature-curve linearity",
    "different exactness",
    "main-theorem slope and two-route agreement",
    "corollary inequality on shipped examples",
    "cyclic-cover transformation",
    "Hilbert-Kunz multiplicity",
    "property suites",
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    if (selected.empty())
        for (int i = 1; i <= 9; ++i) selected.push_back(i);

    Criterion (*runners[9])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                 criterion6, criterion7, criterion8, criterion9};

    bool all_ok = true;
    for (int idx : selected) {
        if (idx < 1 || idx > 9) {
            std::fprintf(stderr, "unknown criterion %d\n", idx);
            return 1;
        }
        Criterion c;
        try {
            c = runners[idx - 1]();
        } catch (const Error& err) {
            c.ok = false;
            c.detail = std::string("exception: ") + err.what();
        }
        std::printf("%s criterion %d: %s%s%s\n", c.ok ? "PASS" : "FAIL", idx, kNames[idx - 1],
                    c.detail.empty() ? "" : " -- ", c.detail.c_str());
        std::fflush(stdout);
        if (!c.ok) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
