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

#include "macaulay_oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsig_oracle {

unsigned long long box_rank_parallel(const RingPtr& ring, long long q,
                                     const std::vector<Polynomial>& gens) {
    const int n = ring->nvars();
    detail::Eliminator elim(*ring);

    unsigned long long cells = 1;
    for (int i = 0; i < n; ++i) cells *= (unsigned long long)q;
    const unsigned long long batch = 4096;

    std::vector<SparseRow> residuals;
    for (unsigned long long start = 0; start < cells; start += batch) {
        const unsigned long long stop = std::min(cells, start + batch);
        const size_t rows = (size_t)(stop - start) * gens.size();
        residuals.assign(rows, {});

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
        for (long long off = 0; off < (long long)(stop - start); ++off) {
            unsigned long long code = start + (unsigned long long)off;
            fsig::Monomial mu(n);
            for (int i = n - 1; i >= 0; --i) {
                mu.set_exp(i, (long long)(code % (unsigned long long)q));
                code /= (unsigned long long)q;
            }
            for (size_t gi = 0; gi < gens.size(); ++gi)
                residuals[(size_t)off * gens.size() + gi] = elim.reduce_only(
                    detail::multiplication_row(*ring, gens[gi], mu, q));
        }
        // Admission is serial and ordered, so the pivot set evolves
        // identically for every thread count.
        for (auto& row : residuals)
            if (!row.empty()) elim.admit(std::move(row));
    }
    return elim.rank;
}

}  // namespace fsig_oracle
