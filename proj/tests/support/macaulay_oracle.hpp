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

// Test-only linear-algebra length oracle, independent of the Gröbner and
// staircase code paths. Everything is Gaussian elimination on multiplication
// rows over the finite-dimensional algebra S/m^[q]:
//
//   rank{ proj(mu * h) : mu in [0,q)^n }          = colength of (m^[q] : h)
//   q^n - rank{ proj(mu * g_i) : mu, g_i }        = colength of m^[q] + (g_i)
//
// where proj drops monomials with any exponent >= q.

#ifndef FSIG_TESTS_MACAULAY_ORACLE_HPP
#define FSIG_TESTS_MACAULAY_ORACLE_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "fsig/polynomial.hpp"

namespace fsig_oracle {

using fsig::Polynomial;
using fsig::Ring;
using fsig::RingPtr;
using fsig::Term;

using SparseRow = std::vector<std::pair<long long, std::uint32_t>>;  // ascending column

namespace detail {

// Column index of a box monomial in mixed radix q.
inline long long column_of(const fsig::Monomial& m, int n, long long q) {
    long long col = 0;
    for (int i = 0; i < n; ++i) {
        if (m.exp(i) >= q) return -1;  // outside the box
        col = col * q + m.exp(i);
    }
    return col;
}

inline SparseRow multiplication_row(const Ring& ring, const Polynomial& g,
                                    const fsig::Monomial& mu, long long q) {
    SparseRow row;
    for (const Term& t : g.terms()) {
        long long col = column_of(mu.times(t.m), ring.nvars(), q);
        if (col >= 0) row.emplace_back(col, t.c);
    }
    std::sort(row.begin(), row.end());
    SparseRow out;
    for (size_t i = 0; i < row.size();) {
        long long col = row[i].first;
        std::uint32_t c = 0;
        while (i < row.size() && row[i].first == col) c = ring.fadd(c, row[i++].second);
        if (c) out.emplace_back(col, c);
    }
    return out;
}

// row -= row.lead_coeff * pivot (pivot normalized to lead coefficient 1).
inline SparseRow subtract_scaled(const Ring& ring, const SparseRow& row, const SparseRow& pivot,
                                 std::uint32_t factor) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < row.size() && j < pivot.size()) {
        if (row[i].first < pivot[j].first) {
            out.push_back(row[i++]);
        } else if (row[i].first > pivot[j].first) {
            out.emplace_back(pivot[j].first, ring.fneg(ring.fmul(factor, pivot[j].second)));
            ++j;
        } else {
            std::uint32_t c = ring.fsub(row[i].second, ring.fmul(factor, pivot[j].second));
            if (c) out.emplace_back(row[i].first, c);
            ++i;
            ++j;
        }
    }
    while (i < row.size()) out.push_back(row[i++]);
    while (j < pivot.size()) {
        out.emplace_back(pivot[j].first, ring.fneg(ring.fmul(factor, pivot[j].second)));
        ++j;
    }
    return out;
}

struct Eliminator {
    const Ring& ring;
    std::map<long long, SparseRow> pivots;  // lead column -> normalized row
    unsigned long long rank = 0;

    explicit Eliminator(const Ring& r) : ring(r) {}

    // Reduces against existing pivots only; no insertion.
    SparseRow reduce_only(SparseRow row) const {
        while (!row.empty()) {
            auto it = pivots.find(row.back().first);
            if (it == pivots.end()) break;
            row = subtract_scaled(ring, row, it->second, row.back().second);
        }
        return row;
    }

    void admit(SparseRow row) {
        row = reduce_only(std::move(row));
        if (row.empty()) return;
        std::uint32_t inv = ring.finv(row.back().second);
        if (inv != 1)
            for (auto& [col, c] : row) c = ring.fmul(c, inv);
        pivots.emplace(row.back().first, std::move(row));
        ++rank;
    }
};

}  // namespace detail

/// Rank of the span of all box-multiplication rows of the given polynomials.
/// Serial reference implementation.
inline unsigned long long box_rank_serial(const RingPtr& ring, long long q,
                                          const std::vector<Polynomial>& gens) {
    const int n = ring->nvars();
    detail::Eliminator elim(*ring);
    fsig::Monomial mu(n);
    std::vector<long long> odo((size_t)n, 0);
    while (true) {
        for (int i = 0; i < n; ++i) mu.set_exp(i, odo[(size_t)i]);
        for (const Polynomial& g : gens)
            elim.admit(detail::multiplication_row(*ring, g, mu, q));
        int pos = 0;
        while (pos < n && ++odo[(size_t)pos] == q) odo[(size_t)pos++] = 0;
        if (pos == n) break;
    }
    return elim.rank;
}

/// Batched variant: rows of a batch are pre-reduced against the existing
/// pivots in parallel, then admitted in fixed order. Rank is identical to
/// the serial reference for any thread count.
unsigned long long box_rank_parallel(const RingPtr& ring, long long q,
                                     const std::vector<Polynomial>& gens);

/// Colength of (m^[q] : h) by multiplication-matrix rank.
inline unsigned long long colon_colength_oracle(const RingPtr& ring, long long q,
                                                const Polynomial& h) {
    return box_rank_parallel(ring, q, {h});
}

/// Colength of m^[q] + (g_1, ..., g_k).
inline unsigned long long sum_colength_oracle(const RingPtr& ring, long long q,
                                              const std::vector<Polynomial>& gens) {
    unsigned long long total = 1;
    for (int i = 0; i < ring->nvars(); ++i) total *= (unsigned long long)q;
    return total - box_rank_parallel(ring, q, gens);
}

}  // namespace fsig_oracle

#endif
