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

#ifndef FSIG_GROEBNER_HPP
#define FSIG_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fsig/polynomial.hpp"

namespace fsig {

/// Resource caps for Gröbner machinery. Exceeding a cap raises a budget
/// error; results are never silently truncated.
struct Budget {
    unsigned long long reduction_steps = 400ull * 1000 * 1000;
    unsigned long long staircase_box = 1ull << 40;
    int saturation_iters = 64;

    static Budget& global();  // process-wide defaults, set by the CLI
};

/// Working order for the invariant pipelines; grevlex unless the CLI asked
/// for lex. Elimination steps always use their own block orders.
const MonomialOrder& working_order();
void set_working_order(MonomialOrder ord);

/// Number of standard monomials of an Artinian leading-term ideal, plus the
/// pure-power bounding box. finite == false means some variable has no pure
/// power among the leading terms.
struct StaircaseCount {
    bool finite = false;
    unsigned long long colength = 0;
    std::vector<long long> box;
};

/// Generator set with cached reduced Gröbner bases per monomial order.
/// Value-semantic; copies share the (thread-safe) cache.
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    /// The maximal ideal (all variables).
    static Ideal maximal(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool has_generators() const { return !gens_.empty(); }

    /// Reduced Gröbner basis, deterministic for identical inputs. Cached per
    /// order; concurrent calls may duplicate work but never observe a
    /// partially built basis.
    const std::vector<Polynomial>& groebner(MonomialOrder ord = working_order()) const;

    bool contains(const Polynomial& f, MonomialOrder ord = working_order()) const;
    bool contains_ideal(const Ideal& other, MonomialOrder ord = working_order()) const;
    bool is_unit_ideal(MonomialOrder ord = working_order()) const;
    /// Equality via reduced-basis comparison.
    bool same_ideal_as(const Ideal& other, MonomialOrder ord = working_order()) const;

  private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Buchberger with the lcm (coprimality) and chain criteria, normal pair
/// selection (minimal lcm degree first, ties by generator index). Output is
/// the reduced basis: monic, self-reduced, sorted by ascending lead term.
std::vector<Polynomial> buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                                   MonomialOrder ord, const Budget& budget = Budget::global());

/// Unique remainder of f modulo the reduced basis of I.
Polynomial normal_form(const Polynomial& f, const Ideal& I,
                       MonomialOrder ord = working_order());
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder ord, const Budget& budget = Budget::global());

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// Ideal generated by g^(p^e) for generators g.
Ideal frobenius_power_ideal(const Ideal& I, int e);

/// (I : g) via the auxiliary-variable intersection: eliminate t from
/// t*I + (1-t)*(g), then divide the t-free basis by g.
Ideal colon_poly(const Ideal& I, const Polynomial& g,
                 MonomialOrder ord = working_order());

/// (I : J), the intersection of (I : g) over generators g of J.
Ideal colon_ideal(const Ideal& I, const Ideal& J, MonomialOrder ord = working_order());

Ideal intersection(const Ideal& a, const Ideal& b, MonomialOrder ord = working_order());

/// Iterates (I : g) until the ideal stabilizes (reduced-basis equality).
Ideal saturation(const Ideal& I, const Polynomial& g,
                 MonomialOrder ord = working_order());

/// Colength by staircase counting over the pure-power bounding box.
StaircaseCount artinian_length(const Ideal& J, MonomialOrder ord = working_order());
StaircaseCount staircase_count(const std::vector<Monomial>& lead_terms, int nvars,
                               const Budget& budget = Budget::global());

/// Dimension of the leading-term ideal: the largest variable subset touching
/// no leading term's support. Errors on the unit ideal.
int krull_dimension(const Ideal& J, MonomialOrder ord = working_order());

/// Exact division; errors when g does not divide f exactly.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace fsig

#endif
