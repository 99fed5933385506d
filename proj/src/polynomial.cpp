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

#include "fsig/polynomial.hpp"

#include <algorithm>
#include <cctype>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsig {

namespace {

void sort_and_combine(const Ring& ring, const MonomialOrder& ord, std::vector<Term>& t) {
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    size_t out = 0;
    for (size_t i = 0; i < t.size();) {
        Monomial m = t[i].m;
        std::uint32_t c = 0;
        while (i < t.size() && t[i].m == m) {
            c = ring.fadd(c, t[i].c);
            ++i;
        }
        if (c != 0) t[out++] = Term{m, c};
    }
    t.resize(out);
}

// Merges two term streams already sorted descending under ord.
std::vector<Term> merge_terms(const Ring& ring, const MonomialOrder& ord,
                              const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = ord.cmp(a[i].m, b[j].m);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
        } else {
            std::uint32_t s = ring.fadd(a[i].c, b[j].c);
            if (s) out.push_back(Term{a[i].m, s});
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

std::vector<Term> product_block(const Ring& ring, const MonomialOrder& ord,
                                const Term* at, size_t an, const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(an * b.size());
    for (size_t i = 0; i < an; ++i)
        for (const Term& tb : b)
            out.push_back(Term{at[i].m.times(tb.m), ring.fmul(at[i].c, tb.c)});
    sort_and_combine(ring, ord, out);
    return out;
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring, MonomialOrder ord) {
    Polynomial p;
    p.ring_ = std::move(ring);
    p.ord_ = ord;
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::uint32_t c, MonomialOrder ord) {
    Polynomial p = zero(std::move(ring), ord);
    c %= p.ring_->p();
    if (c) p.terms_.push_back(Term{Monomial::one(p.ring_->nvars()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i, MonomialOrder ord) {
    Polynomial p = zero(std::move(ring), ord);
    p.terms_.push_back(Term{Monomial::variable(p.ring_->nvars(), i), 1});
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, std::uint32_t c, MonomialOrder ord) {
    Polynomial p = zero(std::move(ring), ord);
    c %= p.ring_->p();
    if (c) p.terms_.push_back(Term{m, c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder ord) {
    Polynomial p = zero(std::move(ring), ord);
    for (auto& t : terms) t.c %= p.ring_->p();
    sort_and_combine(*p.ring_, ord, terms);
    p.terms_ = std::move(terms);
    return p;
}

const Term& Polynomial::lead() const {
    if (terms_.empty()) fail(Errc::input, "lead term of zero polynomial");
    return terms_[0];
}

long long Polynomial::degree() const {
    long long d = -1;
    for (const Term& t : terms_) {
        long long td = t.m.degree();
        if (td > d) d = td;
    }
    return d;
}

Polynomial Polynomial::resorted(MonomialOrder ord) const {
    if (ord == ord_) return *this;
    Polynomial p = *this;
    p.ord_ = ord;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*ring_, *o.ring_);
    const Polynomial& rhs = (o.ord_ == ord_) ? o : o.resorted(ord_);
    Polynomial p = zero(ring_, ord_);
    p.terms_ = merge_terms(*ring_, ord_, terms_, rhs.terms_);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.c = ring_->fneg(t.c);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
    c %= ring_->p();
    if (c == 0) return zero(ring_, ord_);
    Polynomial p = *this;
    if (c != 1)
        for (auto& t : p.terms_) t.c = ring_->fmul(t.c, c);
    return p;
}

Polynomial Polynomial::times_term(std::uint32_t c, const Monomial& m) const {
    c %= ring_->p();
    if (c == 0) return zero(ring_, ord_);
    Polynomial p = *this;
    for (auto& t : p.terms_) {
        t.m = t.m.times(m);
        if (c != 1) t.c = ring_->fmul(t.c, c);
    }
    return p;  // multiplication by a monomial preserves the ordering
}

Polynomial Polynomial::sub_times_term(const Polynomial& g, std::uint32_t c,
                                      const Monomial& m) const {
    Polynomial scaledg = g.resorted(ord_).times_term(ring_->fneg(c), m);
    Polynomial p = zero(ring_, ord_);
    p.terms_ = merge_terms(*ring_, ord_, terms_, scaledg.terms_);
    return p;
}

Polynomial mul_serial(const Polynomial& a, const Polynomial& b) {
    require_same_ring(*a.ring(), *b.ring());
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring(), a.order());
    const Polynomial& rhs = (b.order() == a.order()) ? b : b.resorted(a.order());
    std::vector<Term> out =
        product_block(*a.ring(), a.order(), a.terms().data(), a.terms().size(), rhs.terms());
    return Polynomial::from_terms(a.ring(), std::move(out), a.order());
}

Polynomial mul_parallel(const Polynomial& a, const Polynomial& b) {
    require_same_ring(*a.ring(), *b.ring());
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring(), a.order());
    const Polynomial& rhs = (b.order() == a.order()) ? b : b.resorted(a.order());
    const size_t an = a.terms().size();
    int nchunks = 1;
#ifdef _OPENMP
    nchunks = omp_get_max_threads();
#endif
    if (nchunks < 2 || an * rhs.terms().size() < 16384)
        return mul_serial(a, rhs);
    if ((size_t)nchunks > an) nchunks = (int)an;

    std::vector<std::vector<Term>> parts((size_t)nchunks);
    const size_t step = (an + (size_t)nchunks - 1) / (size_t)nchunks;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int k = 0; k < nchunks; ++k) {
        size_t lo = (size_t)k * step;
        size_t hi = std::min(lo + step, an);
        if (lo < hi)
            parts[(size_t)k] =
                product_block(*a.ring(), a.order(), a.terms().data() + lo, hi - lo, rhs.terms());
    }
    // Deterministic pairwise merge, independent of thread count.
    while (parts.size() > 1) {
        std::vector<std::vector<Term>> next;
        for (size_t i = 0; i + 1 < parts.size(); i += 2)
            next.push_back(merge_terms(*a.ring(), a.order(), parts[i], parts[i + 1]));
        if (parts.size() % 2) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    if (parts.empty()) return Polynomial::zero(a.ring(), a.order());
    return Polynomial::from_terms(a.ring(), std::move(parts[0]), a.order());
}

Polynomial Polynomial::operator*(const Polynomial& o) const { return mul_parallel(*this, o); }

Polynomial Polynomial::pow(unsigned long long n) const {
    Polynomial acc = constant(ring_, 1, ord_);
    Polynomial base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        if (n > 1) base = base * base;
        n >>= 1;
    }
    return acc;
}

Polynomial Polynomial::frobenius_power(int e) const {
    if (e < 0) fail(Errc::input, "negative Frobenius level");
    if (e == 0) return *this;
    long long q = 1;
    for (int i = 0; i < e; ++i) q = checked_mul(q, (long long)ring_->p());
    Polynomial p = *this;
    for (auto& t : p.terms_) t.m = t.m.scaled(q);  // c^q = c on the prime field
    return p;
}

Polynomial Polynomial::power_q_minus_one(int e) const {
    if (e < 1) fail(Errc::input, "power_q_minus_one needs level >= 1");
    Polynomial g = pow(ring_->p() - 1);
    Polynomial acc = g;
    for (int k = 1; k < e; ++k) acc = acc * g.frobenius_power(k);
    return acc;
}

bool Polynomial::equals(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_)) return false;
    const Polynomial a = resorted(MonomialOrder::grevlex());
    const Polynomial b = o.resorted(MonomialOrder::grevlex());
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].c != b.terms_[i].c || a.terms_[i].m != b.terms_[i].m) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const Polynomial p = resorted(MonomialOrder::grevlex());
    std::string out;
    bool first = true;
    for (const Term& t : p.terms_) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        for (int i = 0; i < ring_->nvars(); ++i) {
            long long e = t.m.exp(i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var_name(i);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += std::to_string(t.c);
        } else if (t.c == 1) {
            out += mono;
        } else {
            out += std::to_string(t.c) + "*" + mono;
        }
    }
    return out;
}

Polynomial Polynomial::lifted_front(const RingPtr& bigger) const {
    Polynomial p = zero(bigger, ord_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back(Term{t.m.lifted_front(), t.c});
    // Lifting into a leading variable preserves both grevlex and block order
    // on variable-disjoint tails, but re-sort to stay canonical in general.
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term& a, const Term& b) { return p.ord_.greater(a.m, b.m); });
    return p;
}

Polynomial Polynomial::dropped_front(const RingPtr& smaller) const {
    Polynomial p = zero(smaller, MonomialOrder::grevlex());
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (t.m.exp(0) != 0) fail(Errc::input, "polynomial still involves eliminated variable");
        p.terms_.push_back(Term{t.m.dropped_front(), t.c});
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term& a, const Term& b) { return p.ord_.greater(a.m, b.m); });
    return p;
}

bool Polynomial::involves_var(int i) const {
    for (const Term& t : terms_)
        if (t.m.exp(i) != 0) return true;
    return false;
}

// --- parser ---------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) {
            if (src[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    char advance() {
        char c = src[pos++];
        ++col;
        return c;
    }
    [[noreturn]] void error(const std::string& msg) {
        throw Error(Errc::parse, msg + " at line " + std::to_string(line) + ", column " +
                                     std::to_string(col),
                    line, col);
    }
};

struct PolyParser {
    Lexer lx;
    const RingPtr& ring;
    MonomialOrder ord;

    PolyParser(const std::string& s, const RingPtr& r, MonomialOrder o) : lx(s), ring(r), ord(o) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (lx.peek() != '\0') lx.error("unexpected trailing input");
        return p;
    }

    Polynomial expr() {
        Polynomial acc = Polynomial::zero(ring, ord);
        bool neg = false;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.advance();
            neg = (c == '-');
        }
        acc = neg ? -term() : term();
        while (true) {
            c = lx.peek();
            if (c == '+' || c == '-') {
                lx.advance();
                Polynomial t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lx.peek() == '*') {
            lx.advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (lx.peek() == '^') {
            lx.advance();
            if (lx.peek() == '-') lx.error("negative exponent");
            if (!std::isdigit((unsigned char)lx.peek())) lx.error("expected exponent");
            unsigned long long e = natural();
            return base.pow(e);
        }
        return base;
    }

    Polynomial atom() {
        char c = lx.peek();
        if (c == '(') {
            lx.advance();
            Polynomial p = expr();
            if (lx.peek() != ')') lx.error("expected ')'");
            lx.advance();
            return p;
        }
        if (c == '-') {
            lx.advance();
            return -atom();
        }
        if (std::isdigit((unsigned char)c)) {
            std::uint32_t v = 0;
            while (lx.pos < lx.src.size() && std::isdigit((unsigned char)lx.src[lx.pos])) {
                v = (std::uint32_t)(((std::uint64_t)v * 10 + (std::uint64_t)(lx.advance() - '0')) %
                                    ring->p());
            }
            return Polynomial::constant(ring, v, ord);
        }
        if (std::isalpha((unsigned char)c)) {
            std::string name;
            while (lx.pos < lx.src.size() &&
                   (std::isalnum((unsigned char)lx.src[lx.pos]) || lx.src[lx.pos] == '_'))
                name += lx.advance();
            int idx = ring->var_index(name);
            if (idx < 0) lx.error("unknown identifier '" + name + "'");
            return Polynomial::variable(ring, idx, ord);
        }
        lx.error("unexpected character");
    }

    unsigned long long natural() {
        unsigned long long v = 0;
        while (lx.pos < lx.src.size() && std::isdigit((unsigned char)lx.src[lx.pos])) {
            unsigned long long d = (unsigned long long)(lx.advance() - '0');
            if (v > (~0ull - d) / 10) lx.error("exponent too large");
            v = v * 10 + d;
        }
        return v;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& src, const RingPtr& ring, MonomialOrder ord) {
    PolyParser parser(src, ring, ord);
    return parser.parse();
}

}  // namespace fsig
