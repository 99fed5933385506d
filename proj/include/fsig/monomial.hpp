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

#ifndef FSIG_MONOMIAL_HPP
#define FSIG_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>

#include "fsig/errors.hpp"
#include "fsig/ring.hpp"

namespace fsig {

/// Exponent vector of fixed arity. Exponents are checked 64-bit integers;
/// degree and product computations refuse to wrap.
class Monomial {
  public:
    Monomial() : nv_(0) { e_.fill(0); }
    explicit Monomial(int nvars) : nv_(nvars) { e_.fill(0); }

    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial variable(int nvars, int i, long long exp = 1) {
        Monomial m(nvars);
        m.e_[(size_t)i] = exp;
        return m;
    }

    int nvars() const { return nv_; }
    long long exp(int i) const { return e_[(size_t)i]; }
    void set_exp(int i, long long v) {
        if (v < 0) fail(Errc::input, "negative exponent in monomial");
        e_[(size_t)i] = v;
    }

    long long degree() const {
        long long d = 0;
        for (int i = 0; i < nv_; ++i) d = checked_add(d, e_[(size_t)i]);
        return d;
    }

    bool is_one() const {
        for (int i = 0; i < nv_; ++i)
            if (e_[(size_t)i]) return false;
        return true;
    }

    Monomial times(const Monomial& o) const {
        Monomial r(nv_);
        for (int i = 0; i < nv_; ++i) r.e_[(size_t)i] = checked_add(e_[(size_t)i], o.e_[(size_t)i]);
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < nv_; ++i)
            if (e_[(size_t)i] > o.e_[(size_t)i]) return false;
        return true;
    }

    /// Componentwise quotient; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& numer) const {
        Monomial r(nv_);
        for (int i = 0; i < nv_; ++i) r.e_[(size_t)i] = numer.e_[(size_t)i] - e_[(size_t)i];
        return r;
    }

    Monomial lcm_with(const Monomial& o) const {
        Monomial r(nv_);
        for (int i = 0; i < nv_; ++i)
            r.e_[(size_t)i] = e_[(size_t)i] > o.e_[(size_t)i] ? e_[(size_t)i] : o.e_[(size_t)i];
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (int i = 0; i < nv_; ++i)
            if (e_[(size_t)i] && o.e_[(size_t)i]) return false;
        return true;
    }

    Monomial scaled(long long factor) const {
        Monomial r(nv_);
        for (int i = 0; i < nv_; ++i) r.e_[(size_t)i] = checked_mul(e_[(size_t)i], factor);
        return r;
    }

    bool operator==(const Monomial& o) const { return nv_ == o.nv_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    /// Exponent vector reinterpreted in a ring with one more leading variable.
    Monomial lifted_front() const {
        Monomial r(nv_ + 1);
        for (int i = 0; i < nv_; ++i) r.e_[(size_t)i + 1] = e_[(size_t)i];
        return r;
    }
    /// Drops the leading variable (exponent must be zero).
    Monomial dropped_front() const {
        Monomial r(nv_ - 1);
        for (int i = 1; i < nv_; ++i) r.e_[(size_t)i - 1] = e_[(size_t)i];
        return r;
    }

  private:
    int nv_;
    std::array<long long, Ring::kMaxVars> e_;
};

/// Total, multiplicative monomial orders with 1 minimal. Block orders
/// eliminate the first block_k variables.
struct MonomialOrder {
    enum class Kind { grevlex, lex, block };

    Kind kind = Kind::grevlex;
    int block_k = 0;

    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder block_elim(int k) { return {Kind::block, k}; }

    /// Returns >0 when a is larger, <0 when b is larger, 0 on equality.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::lex:
                return cmp_lex(a, b, 0, a.nvars());
            case Kind::grevlex:
                return cmp_grevlex(a, b, 0, a.nvars());
            case Kind::block: {
                int c = cmp_grevlex(a, b, 0, block_k);
                if (c) return c;
                return cmp_grevlex(a, b, block_k, a.nvars());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    std::string cache_key() const {
        switch (kind) {
            case Kind::lex:
                return "lex";
            case Kind::grevlex:
                return "grevlex";
            case Kind::block:
                return "block:" + std::to_string(block_k);
        }
        return "?";
    }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != Kind::block || block_k == o.block_k);
    }

  private:
    static int cmp_lex(const Monomial& a, const Monomial& b, int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            long long d = a.exp(i) - b.exp(i);
            if (d) return d > 0 ? 1 : -1;
        }
        return 0;
    }
    static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
        long long da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da = checked_add(da, a.exp(i));
            db = checked_add(db, b.exp(i));
        }
        if (da != db) return da > db ? 1 : -1;
        for (int i = hi - 1; i >= lo; --i) {
            long long d = a.exp(i) - b.exp(i);
            if (d) return d < 0 ? 1 : -1;
        }
        return 0;
    }
};

}  // namespace fsig

#endif
