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

#ifndef FSIG_POLYNOMIAL_HPP
#define FSIG_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fsig/monomial.hpp"
#include "fsig/ring.hpp"

namespace fsig {

struct Term {
    Monomial m;
    std::uint32_t c;  // in [1, p)
};

/// Sparse multivariate polynomial over F_p in canonical form: strictly
/// descending monomials under the active order, no zero coefficients.
/// Polynomials are immutable values; every operation returns a fresh one.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial zero(RingPtr ring, MonomialOrder ord = MonomialOrder::grevlex());
    static Polynomial constant(RingPtr ring, std::uint32_t c,
                               MonomialOrder ord = MonomialOrder::grevlex());
    static Polynomial variable(RingPtr ring, int i, MonomialOrder ord = MonomialOrder::grevlex());
    static Polynomial monomial(RingPtr ring, Monomial m, std::uint32_t c,
                               MonomialOrder ord = MonomialOrder::grevlex());
    /// Sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms,
                                 MonomialOrder ord = MonomialOrder::grevlex());

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }
    bool is_unit() const { return terms_.size() == 1 && terms_[0].m.is_one(); }
    size_t term_count() const { return terms_.size(); }

    const Term& lead() const;
    const Monomial& lead_monomial() const { return lead().m; }
    std::uint32_t lead_coeff() const { return lead().c; }
    long long degree() const;  // degree of zero polynomial is -1

    /// Same terms re-sorted under another order.
    Polynomial resorted(MonomialOrder ord) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;

    Polynomial scaled(std::uint32_t c) const;
    Polynomial times_term(std::uint32_t c, const Monomial& m) const;
    /// this - c * m * g, the reduction workhorse.
    Polynomial sub_times_term(const Polynomial& g, std::uint32_t c, const Monomial& m) const;

    Polynomial pow(unsigned long long n) const;  // square-and-multiply

    /// f^(p^e) by scaling every exponent by p^e. Coefficients are fixed
    /// points of Frobenius on the prime field.
    Polynomial frobenius_power(int e) const;

    /// f^(p^e - 1) via the factorization p^e-1 = (p-1)(1 + p + ... + p^(e-1)):
    /// g = f^(p-1), then the product of frobenius_power(g, k) for k < e.
    Polynomial power_q_minus_one(int e) const;

    /// Content-independent equality (order tags may differ).
    bool equals(const Polynomial& o) const;

    /// Canonical rendering: descending grevlex, coefficients in [0, p).
    std::string to_string() const;

    /// Polynomial reinterpreted in a ring with one extra leading variable.
    Polynomial lifted_front(const RingPtr& bigger) const;
    /// Inverse of lifted_front for polynomials free of the leading variable.
    Polynomial dropped_front(const RingPtr& smaller) const;
    bool involves_var(int i) const;

  private:
    RingPtr ring_;
    MonomialOrder ord_;
    std::vector<Term> terms_;
};

/// Parses the textual grammar: identifiers, integer literals, + - * ^ and
/// parentheses. Coefficients reduce mod p; exponents must be non-negative.
Polynomial parse_polynomial(const std::string& src, const RingPtr& ring,
                            MonomialOrder ord = MonomialOrder::grevlex());

/// Serial reference product kept alongside the (possibly parallel) operator*.
Polynomial mul_serial(const Polynomial& a, const Polynomial& b);
/// Chunk-parallel product; bit-identical to mul_serial.
Polynomial mul_parallel(const Polynomial& a, const Polynomial& b);

}  // namespace fsig

#endif
