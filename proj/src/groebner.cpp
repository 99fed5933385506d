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

#include "fsig/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace fsig {

Budget& Budget::global() {
    static Budget b;
    return b;
}

namespace {
MonomialOrder g_working_order = MonomialOrder::grevlex();
}

const MonomialOrder& working_order() { return g_working_order; }
void set_working_order(MonomialOrder ord) { g_working_order = ord; }

// --- reduction ------------------------------------------------------------

namespace {

// Compares polynomials term-by-term under ord; used only to fix a
// deterministic processing sequence.
int cmp_poly(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    size_t n = std::min(ta.size(), tb.size());
    for (size_t i = 0; i < n; ++i) {
        int c = ord.cmp(ta[i].m, tb[i].m);
        if (c) return c;
        if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

struct StepCounter {
    unsigned long long used = 0;
    unsigned long long cap;
    explicit StepCounter(unsigned long long c) : cap(c) {}
    void tick() {
        if (++used > cap)
            fail(Errc::budget, "reduction budget exceeded after " + std::to_string(used - 1) +
                                   " steps (raise --budget)");
    }
};

// Full normal form: top- and tail-reduction against basis (monic, sorted by
// ascending lead term). Divisor choice is the first match in basis order.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, StepCounter& steps) {
    Polynomial rem = f.resorted(ord);
    std::vector<Term> done;
    while (!rem.is_zero()) {
        const Term& lt = rem.terms().front();
        const Polynomial* divisor = nullptr;
        for (const Polynomial& g : basis) {
            if (g.lead_monomial().divides(lt.m)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            steps.tick();
            Monomial q = divisor->lead_monomial().quotient_of(lt.m);
            rem = rem.sub_times_term(*divisor, lt.c, q);  // divisor is monic
        } else {
            done.push_back(lt);
            Polynomial tail = Polynomial::from_terms(
                rem.ring(), std::vector<Term>(rem.terms().begin() + 1, rem.terms().end()), ord);
            rem = std::move(tail);
        }
    }
    return Polynomial::from_terms(f.ring(), std::move(done), ord);
}

Polynomial spoly(const Polynomial& a, const Polynomial& b) {
    Monomial l = a.lead_monomial().lcm_with(b.lead_monomial());
    // Both inputs monic.
    Polynomial left = a.times_term(1, a.lead_monomial().quotient_of(l));
    return left.sub_times_term(b, 1, b.lead_monomial().quotient_of(l));
}

struct PairKey {
    long long deg;
    Monomial lcm;
    int i, j;
};

struct PairLess {
    MonomialOrder ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord.cmp(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

std::vector<Polynomial> buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                                   MonomialOrder ord, const Budget& budget) {
    StepCounter steps(budget.reduction_steps);

    std::vector<Polynomial> G;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(*ring, *g.ring());
        Polynomial h = g.resorted(ord);
        G.push_back(h.scaled(ring->finv(h.lead_coeff())));
    }
    // Deterministic starting sequence.
    std::sort(G.begin(), G.end(),
              [&](const Polynomial& a, const Polynomial& b) { return cmp_poly(a, b, ord) < 0; });
    G.erase(std::unique(G.begin(), G.end(),
                        [&](const Polynomial& a, const Polynomial& b) {
                            return cmp_poly(a, b, ord) == 0;
                        }),
            G.end());

    if (G.empty()) return G;

    PairLess less{ord};
    std::set<PairKey, PairLess> queue(less);
    std::set<std::pair<int, int>> treated;
    auto push_pair = [&](int i, int j) {
        Monomial l = G[(size_t)i].lead_monomial().lcm_with(G[(size_t)j].lead_monomial());
        queue.insert(PairKey{l.degree(), l, i, j});
    };
    for (int i = 0; i < (int)G.size(); ++i)
        for (int j = i + 1; j < (int)G.size(); ++j) push_pair(i, j);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({pk.i, pk.j});

        const Monomial& li = G[(size_t)pk.i].lead_monomial();
        const Monomial& lj = G[(size_t)pk.j].lead_monomial();
        if (li.coprime_with(lj)) continue;  // product criterion

        // Chain criterion: skip when some lt(k) divides the lcm and both
        // side pairs were already handled.
        bool skip = false;
        for (int k = 0; k < (int)G.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!G[(size_t)k].lead_monomial().divides(pk.lcm)) continue;
            auto p1 = std::minmax(pk.i, k);
            auto p2 = std::minmax(pk.j, k);
            if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = spoly(G[(size_t)pk.i], G[(size_t)pk.j]);
        Polynomial r = reduce_full(s, G, ord, steps);
        if (r.is_zero()) continue;
        r = r.scaled(ring->finv(r.lead_coeff()));
        int idx = (int)G.size();
        G.push_back(std::move(r));
        for (int i = 0; i < idx; ++i) push_pair(i, idx);
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!G[j].lead_monomial().divides(G[i].lead_monomial())) continue;
            if (G[i].lead_monomial() == G[j].lead_monomial())
                redundant = j < i;  // keep the first of equal leads
            else
                redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.lead_monomial(), b.lead_monomial());
    });

    // Tail-reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce_full(minimal[i], others, ord, steps);
        reduced.push_back(r.scaled(ring->finv(r.lead_coeff())));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.lead_monomial(), b.lead_monomial());
    });
    return reduced;
}

// --- Ideal ----------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(*ring_, *g.ring());
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::maximal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner(MonomialOrder ord) const {
    const std::string key = ord.cache_key();
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->bases.find(key);
        if (it != cache_->bases.end()) return *it->second;
    }
    auto basis = std::make_shared<const std::vector<Polynomial>>(
        buchberger(ring_, gens_, ord, Budget::global()));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->bases.emplace(key, basis);
    return *it->second;  // first writer wins; duplicates are identical anyway
}

bool Ideal::contains(const Polynomial& f, MonomialOrder ord) const {
    return normal_form(f, *this, ord).is_zero();
}

bool Ideal::contains_ideal(const Ideal& other, MonomialOrder ord) const {
    for (const auto& g : other.generators())
        if (!contains(g, ord)) return false;
    return true;
}

bool Ideal::is_unit_ideal(MonomialOrder ord) const {
    const auto& basis = groebner(ord);
    return basis.size() == 1 && basis[0].is_unit();
}

bool Ideal::same_ideal_as(const Ideal& other, MonomialOrder ord) const {
    const auto& a = groebner(ord);
    const auto& b = other.groebner(ord);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].equals(b[i])) return false;
    return true;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, MonomialOrder ord) {
    return normal_form(f, I.groebner(ord), ord, Budget::global());
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder ord, const Budget& budget) {
    StepCounter steps(budget.reduction_steps);
    return reduce_full(f, basis, ord, steps);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(*a.ring(), *b.ring());
    std::vector<Polynomial> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(*a.ring(), *b.ring());
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal frobenius_power_ideal(const Ideal& I, int e) {
    if (e < 0) fail(Errc::input, "negative Frobenius level");
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.frobenius_power(e));
    return Ideal(I.ring(), std::move(gens));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) fail(Errc::input, "division by zero polynomial");
    const MonomialOrder ord = f.order();
    const Ring& ring = *f.ring();
    const Polynomial gg = g.resorted(ord);
    const std::uint32_t glc_inv = ring.finv(gg.lead_coeff());
    Polynomial rem = f;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& lt = rem.terms().front();
        if (!gg.lead_monomial().divides(lt.m))
            fail(Errc::input, "polynomial is not exactly divisible");
        Monomial qm = gg.lead_monomial().quotient_of(lt.m);
        std::uint32_t qc = ring.fmul(lt.c, glc_inv);
        quot.push_back(Term{qm, qc});
        rem = rem.sub_times_term(gg, qc, qm);
    }
    return Polynomial::from_terms(f.ring(), std::move(quot), ord);
}

namespace {

// Shared elimination core: Gröbner basis of t*A + (1-t)*B in an extended
// ring, returning the t-free elements, i.e. generators of A ∩ B.
std::vector<Polynomial> eliminate_intersection(const RingPtr& ring,
                                               const std::vector<Polynomial>& gens_a,
                                               const std::vector<Polynomial>& gens_b,
                                               MonomialOrder /*ord*/) {
    RingPtr ext = extend_ring_front(ring);
    Monomial tvar = Monomial::variable(ext->nvars(), 0);
    std::vector<Polynomial> gens;
    for (const auto& g : gens_a) gens.push_back(g.lifted_front(ext).times_term(1, tvar));
    for (const auto& g : gens_b) {
        Polynomial lifted = g.lifted_front(ext);
        gens.push_back(lifted.sub_times_term(lifted, 1, tvar));  // (1 - t) * g
    }
    MonomialOrder elim = MonomialOrder::block_elim(1);
    std::vector<Polynomial> basis = buchberger(ext, std::move(gens), elim, Budget::global());
    std::vector<Polynomial> tfree;
    for (const auto& g : basis)
        if (!g.involves_var(0)) tfree.push_back(g.dropped_front(ring));
    return tfree;
}

}  // namespace

Ideal colon_poly(const Ideal& I, const Polynomial& g, MonomialOrder ord) {
    if (g.is_zero()) fail(Errc::input, "colon by zero polynomial");
    require_same_ring(*I.ring(), *g.ring());
    if (g.is_constant()) return I;  // (I : unit) = I
    if (!I.has_generators()) return Ideal::zero(I.ring());
    std::vector<Polynomial> inter = eliminate_intersection(I.ring(), I.generators(), {g}, ord);
    std::vector<Polynomial> quotients;
    quotients.reserve(inter.size());
    for (const auto& h : inter) quotients.push_back(exact_divide(h, g));
    return Ideal(I.ring(), std::move(quotients));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J, MonomialOrder ord) {
    require_same_ring(*I.ring(), *J.ring());
    if (!J.has_generators()) fail(Errc::input, "colon by zero ideal");
    bool first = true;
    Ideal acc;
    for (const auto& g : J.generators()) {
        Ideal c = colon_poly(I, g, ord);
        acc = first ? c : intersection(acc, c, ord);
        first = false;
    }
    return acc;
}

Ideal intersection(const Ideal& a, const Ideal& b, MonomialOrder ord) {
    require_same_ring(*a.ring(), *b.ring());
    if (!a.has_generators() || !b.has_generators()) return Ideal::zero(a.ring());
    return Ideal(a.ring(), eliminate_intersection(a.ring(), a.generators(), b.generators(), ord));
}

Ideal saturation(const Ideal& I, const Polynomial& g, MonomialOrder ord) {
    Ideal current = I;
    for (int iter = 0; iter < Budget::global().saturation_iters; ++iter) {
        Ideal next = colon_poly(current, g, ord);
        if (next.same_ideal_as(current, ord)) return current;
        current = std::move(next);
    }
    fail(Errc::budget, "saturation did not stabilize within the iteration cap");
}

// --- staircase ------------------------------------------------------------

namespace {

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
    std::vector<Monomial> out;
    for (size_t i = 0; i < ms.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < ms.size() && !redundant; ++j) {
            if (i == j) continue;
            if (ms[j].divides(ms[i])) redundant = !(ms[i] == ms[j]) || j < i;
        }
        if (!redundant) out.push_back(ms[i]);
    }
    return out;
}

unsigned long long count_standard(const std::vector<Monomial>& gens, int from, int nvars) {
    for (const auto& m : gens) {
        bool unit = true;
        for (int i = from; i < nvars && unit; ++i)
            if (m.exp(i)) unit = false;
        if (unit) return 0;  // slice ideal contains a unit
    }
    if (from == nvars) return 1;

    std::vector<long long> cuts{0};
    for (const auto& m : gens) cuts.push_back(m.exp(from));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Pure power bound for this variable within the slice.
    long long bound = -1;
    for (const auto& m : gens) {
        bool pure = m.exp(from) > 0;
        for (int i = from + 1; i < nvars && pure; ++i)
            if (m.exp(i)) pure = false;
        if (pure && (bound < 0 || m.exp(from) < bound)) bound = m.exp(from);
    }
    if (bound < 0) fail(Errc::input, "staircase slice lost its pure-power bound");

    unsigned long long total = 0;
    for (size_t t = 0; t < cuts.size(); ++t) {
        long long lo = cuts[t];
        if (lo >= bound) break;
        long long hi = (t + 1 < cuts.size()) ? std::min(cuts[t + 1], bound) : bound;
        if (hi <= lo) continue;
        std::vector<Monomial> slice;
        for (const auto& m : gens) {
            if (m.exp(from) > lo) continue;
            Monomial s = m;
            s.set_exp(from, 0);
            slice.push_back(s);
        }
        slice = minimalize_monomials(std::move(slice));
        unsigned long long sub = count_standard(slice, from + 1, nvars);
        total += (unsigned long long)(hi - lo) * sub;
    }
    return total;
}

}  // namespace

StaircaseCount staircase_count(const std::vector<Monomial>& lead_terms, int nvars,
                               const Budget& budget) {
    StaircaseCount out;
    std::vector<Monomial> gens = minimalize_monomials(lead_terms);

    for (const auto& m : gens) {
        if (m.is_one()) {  // unit ideal: empty staircase
            out.finite = true;
            out.colength = 0;
            out.box.assign((size_t)nvars, 0);
            return out;
        }
    }

    out.box.assign((size_t)nvars, -1);
    for (const auto& m : gens) {
        int support = -1;
        bool pure = true;
        for (int i = 0; i < nvars && pure; ++i) {
            if (m.exp(i) == 0) continue;
            if (support >= 0)
                pure = false;
            else
                support = i;
        }
        if (pure && support >= 0) {
            long long& b = out.box[(size_t)support];
            if (b < 0 || m.exp(support) < b) b = m.exp(support);
        }
    }
    for (int i = 0; i < nvars; ++i) {
        if (out.box[(size_t)i] < 0) {
            out.finite = false;
            return out;  // some variable has no pure power: infinite colength
        }
    }

    unsigned __int128 volume = 1;
    for (int i = 0; i < nvars; ++i) {
        volume *= (unsigned __int128)out.box[(size_t)i];
        if (volume > budget.staircase_box)
            fail(Errc::budget, "staircase bounding box exceeds the configured cap");
    }

    out.finite = true;
    out.colength = count_standard(gens, 0, nvars);
    return out;
}

StaircaseCount artinian_length(const Ideal& J, MonomialOrder ord) {
    const auto& basis = J.groebner(ord);
    std::vector<Monomial> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis) leads.push_back(g.lead_monomial());
    return staircase_count(leads, J.ring()->nvars(), Budget::global());
}

int krull_dimension(const Ideal& J, MonomialOrder ord) {
    const int n = J.ring()->nvars();
    const auto& basis = J.groebner(ord);
    std::vector<Monomial> leads;
    for (const auto& g : basis) {
        if (g.is_unit()) fail(Errc::input, "Krull dimension of the unit ideal");
        leads.push_back(g.lead_monomial());
    }
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (m.exp(i) && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace fsig
