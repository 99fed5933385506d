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

// The parallel kernels must agree bit-for-bit with their serial references
// for any thread count.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fsig/fsing.hpp"
#include "fsig/selftest.hpp"
#include "macaulay_oracle.hpp"

using namespace fsig;

namespace {

struct ThreadGuard {
    int saved;
    explicit ThreadGuard(int n) {
#ifdef _OPENMP
        saved = omp_get_max_threads();
        omp_set_num_threads(n);
#else
        saved = n;
#endif
    }
    ~ThreadGuard() {
#ifdef _OPENMP
        omp_set_num_threads(saved);
#endif
    }
};

}  // namespace

TEST_CASE("product kernel: serial reference vs parallel") {
    std::mt19937_64 rng(808);
    RingPtr R = make_ring(7, {"x", "y", "z"});
    for (int threads : {1, 2, 4}) {
        ThreadGuard guard(threads);
        for (int trial = 0; trial < 4; ++trial) {
            Polynomial a = random_polynomial(rng, R, 200, 10);
            Polynomial b = random_polynomial(rng, R, 180, 10);
            Polynomial s = mul_serial(a, b);
            Polynomial p = mul_parallel(a, b);
            CHECK(p.equals(s));
            CHECK(p.to_string() == s.to_string());
        }
    }
}

TEST_CASE("box-rank kernel: serial reference vs batched parallel") {
    std::mt19937_64 rng(909);
    for (std::uint32_t p : {3u, 5u}) {
        RingPtr R = make_ring(p, {"x", "y"});
        for (int threads : {1, 2}) {
            ThreadGuard guard(threads);
            for (int trial = 0; trial < 4; ++trial) {
                Polynomial g = random_polynomial(rng, R, 4, (long long)p);
                if (g.is_zero()) continue;
                long long q = (long long)p * p;
                CHECK(fsig_oracle::box_rank_serial(R, q, {g}) ==
                      fsig_oracle::box_rank_parallel(R, q, {g}));
            }
        }
    }
}

TEST_CASE("signature curve is identical for any thread count") {
    RingPtr S = make_ring(5, {"x", "y", "z"});
    PairSpec pair;
    pair.ring = make_presentation(S, parse_polynomial("x*y - z^2", S));
    QDivisor D;
    D.components.push_back(QDivisorComponent{parse_polynomial("x", S), Rational(1, 2)});
    std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                               Rational(1)};

    std::vector<std::vector<unsigned long long>> lengths;
    for (int threads : {1, 2, 4}) {
        ThreadGuard guard(threads);
        SignatureCurve curve = signature_curve(pair, D, 2, grid);
        std::vector<unsigned long long> ls;
        for (const auto& s : curve.samples) ls.push_back(s.length);
        lengths.push_back(ls);
    }
    CHECK(lengths[0] == lengths[1]);
    CHECK(lengths[0] == lengths[2]);
}

TEST_CASE("concurrent basis requests never expose a partial basis") {
    RingPtr S = make_ring(5, {"x", "y", "z"});
    Ideal I(S, {parse_polynomial("x*y - z^2", S), parse_polynomial("x^3 - y*z", S)});
    std::vector<size_t> sizes(8, 0);
#ifdef _OPENMP
#pragma omp parallel for num_threads(4)
#endif
    for (int i = 0; i < 8; ++i) sizes[(size_t)i] = I.groebner().size();
    for (size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i] == sizes[0]);
}
