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

#include "fsig/selftest.hpp"

#include "fsig/groebner.hpp"

namespace fsig {

Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int max_terms,
                             long long max_exp) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<long long> expd(0, max_exp);
    std::uniform_int_distribution<std::uint32_t> coeff(0, ring->p() - 1);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(ring->nvars());
        for (int i = 0; i < ring->nvars(); ++i) m.set_exp(i, expd(rng));
        terms.push_back(Term{m, coeff(rng)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

namespace {

Monomial random_monomial(std::mt19937_64& rng, int nvars, long long max_exp) {
    std::uniform_int_distribution<long long> expd(0, max_exp);
    Monomial m(nvars);
    for (int i = 0; i < nvars; ++i) m.set_exp(i, expd(rng));
    return m;
}

bool order_laws(std::mt19937_64& rng) {
    const int nvars = 3;
    std::vector<MonomialOrder> orders{MonomialOrder::grevlex(), MonomialOrder::lex(),
                                      MonomialOrder::block_elim(1)};
    Monomial unit = Monomial::one(nvars);
    for (int trial = 0; trial < 300; ++trial) {
        Monomial a = random_monomial(rng, nvars, 6);
        Monomial b = random_monomial(rng, nvars, 6);
        Monomial c = random_monomial(rng, nvars, 6);
        for (const auto& ord : orders) {
            int ab = ord.cmp(a, b);
            // totality and antisymmetry
            if (ab != -ord.cmp(b, a)) return false;
            if ((ab == 0) != (a == b)) return false;
            // multiplicativity
            if (ab != ord.cmp(a.times(c), b.times(c))) return false;
            // 1 is minimal
            if (ord.cmp(unit, a) > 0) return false;
            // transitivity spot check
            if (ab <= 0 && ord.cmp(b, c) <= 0 && ord.cmp(a, c) > 0) return false;
        }
    }
    return true;
}

bool frobenius_ring_map(std::mt19937_64& rng) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        RingPtr R = make_ring(p, {"x", "y"});
        for (int e = 0; e <= 2; ++e) {
            for (int trial = 0; trial < 8; ++trial) {
                Polynomial f = random_polynomial(rng, R, 4, 3);
                Polynomial g = random_polynomial(rng, R, 4, 3);
                if (!(f * g).frobenius_power(e).equals(
                        f.frobenius_power(e) * g.frobenius_power(e)))
                    return false;
                if (!(f + g).frobenius_power(e).equals(
                        f.frobenius_power(e) + g.frobenius_power(e)))
                    return false;
            }
        }
    }
    return true;
}

bool power_agreement(std::mt19937_64& rng) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        RingPtr R = make_ring(p, {"x", "y"});
        for (int e = 1; e <= 2; ++e) {
            unsigned long long qm1 = 1;
            for (int i = 0; i < e; ++i) qm1 *= p;
            --qm1;
            for (int trial = 0; trial < 5; ++trial) {
                Polynomial f = random_polynomial(rng, R, 3, 2);
                if (f.is_zero()) continue;
                if (!f.power_q_minus_one(e).equals(f.pow(qm1))) return false;
            }
        }
    }
    return true;
}

bool roundtrip(std::mt19937_64& rng) {
    RingPtr R = make_ring(7, {"x", "y", "z"});
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial f = random_polynomial(rng, R, 6, 5);
        if (!parse_polynomial(f.to_string(), R).equals(f)) return false;
    }
    return true;
}

bool colon_length_identity(std::mt19937_64& rng) {
    // l(R/(J:g)) = l(R/J) - l(R/(J+(g))) on random Artinian ideals.
    for (std::uint32_t p : {2u, 3u, 5u}) {
        RingPtr R = make_ring(p, {"x", "y"});
        std::uniform_int_distribution<long long> expd(1, 4);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Polynomial> gens;
            gens.push_back(Polynomial::variable(R, 0).pow((unsigned long long)expd(rng)));
            gens.push_back(Polynomial::variable(R, 1).pow((unsigned long long)expd(rng)));
            gens.push_back(random_polynomial(rng, R, 2, 3));
            Ideal J(R, gens);
            Polynomial g = random_polynomial(rng, R, 2, 2);
            if (g.is_zero()) continue;
            auto lj = artinian_length(J);
            auto lcolon = artinian_length(colon_poly(J, g));
            auto lsum = artinian_length(ideal_sum(J, Ideal(R, {g})));
            if (!lj.finite || !lcolon.finite || !lsum.finite) return false;
            if (lcolon.colength != lj.colength - lsum.colength) return false;
        }
    }
    return true;
}

bool basis_determinism(std::mt19937_64& rng) {
    RingPtr R = make_ring(5, {"x", "y", "z"});
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_polynomial(rng, R, 3, 3));
        auto a = buchberger(R, gens, MonomialOrder::grevlex());
        auto b = buchberger(R, gens, MonomialOrder::grevlex());
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i].to_string() != b[i].to_string()) return false;
    }
    return true;
}

bool colon_containments(std::mt19937_64& rng) {
    RingPtr R = make_ring(3, {"x", "y"});
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Polynomial> gens;
        gens.push_back(random_polynomial(rng, R, 2, 3));
        gens.push_back(random_polynomial(rng, R, 2, 3));
        Ideal I(R, gens);
        if (!I.has_generators()) continue;
        Polynomial g = random_polynomial(rng, R, 2, 2);
        if (g.is_zero()) continue;
        Ideal C = colon_poly(I, g);
        if (!C.contains_ideal(I)) return false;  // I subset (I : g)
        for (const auto& c : C.generators())
            if (!I.contains(c * g)) return false;  // (I : g) g subset I
    }
    return true;
}

}  // namespace

SelftestResult run_selftest() {
    SelftestResult res;
    std::mt19937_64 rng(20260810);
    auto add = [&](const std::string& name, bool ok) {
        res.checks.emplace_back(name, ok);
        if (!ok) res.all_passed = false;
    };
    add("monomial orders: total, multiplicative, 1 minimal", order_laws(rng));
    add("frobenius power is a ring map", frobenius_ring_map(rng));
    add("power_q_minus_one agrees with binary exponentiation", power_agreement(rng));
    add("parse/print round trip", roundtrip(rng));
    add("colon length identity on random Artinian ideals", colon_length_identity(rng));
    add("groebner basis determinism", basis_determinism(rng));
    add("colon containments", colon_containments(rng));
    return res;
}

}  // namespace fsig
