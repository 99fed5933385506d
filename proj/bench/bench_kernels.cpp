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

// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "fsig/fsing.hpp"
#include "fsig/selftest.hpp"
#include "macaulay_oracle.hpp"

using namespace fsig;

namespace {

Polynomial dense_poly(const RingPtr& R, int terms, long long max_exp, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_polynomial(rng, R, terms, max_exp);
}

void BM_mul_serial(benchmark::State& state) {
    RingPtr R = make_ring(7, {"x", "y", "z"});
    Polynomial a = dense_poly(R, (int)state.range(0), 40, 1);
    Polynomial b = dense_poly(R, (int)state.range(0), 40, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mul_serial(a, b));
}

void BM_mul_parallel(benchmark::State& state) {
    RingPtr R = make_ring(7, {"x", "y", "z"});
    Polynomial a = dense_poly(R, (int)state.range(0), 40, 1);
    Polynomial b = dense_poly(R, (int)state.range(0), 40, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(a, b));
}

void BM_box_rank_serial(benchmark::State& state) {
    RingPtr R = make_ring(5, {"x", "y", "z"});
    Polynomial f = parse_polynomial("x*y - z^2", R);
    long long q = state.range(0);
    int e = q == 5 ? 1 : 2;
    Polynomial h = f.power_q_minus_one(e);
    for (auto _ : state)
        benchmark::DoNotOptimize(fsig_oracle::box_rank_serial(R, q, {h}));
}

void BM_box_rank_parallel(benchmark::State& state) {
    RingPtr R = make_ring(5, {"x", "y", "z"});
    Polynomial f = parse_polynomial("x*y - z^2", R);
    long long q = state.range(0);
    int e = q == 5 ? 1 : 2;
    Polynomial h = f.power_q_minus_one(e);
    for (auto _ : state)
        benchmark::DoNotOptimize(fsig_oracle::box_rank_parallel(R, q, {h}));
}

void BM_signature_curve(benchmark::State& state) {
    RingPtr S = make_ring(5, {"x", "y", "z"});
    PairSpec pair;
    pair.ring = make_presentation(S, parse_polynomial("x*y - z^2", S));
    QDivisor D;
    D.components.push_back(QDivisorComponent{parse_polynomial("x", S), Rational(1, 2)});
    std::vector<Rational> grid;
    for (long long k = 0; k <= 12; ++k) grid.push_back(Rational(k, 12));
    for (auto _ : state)
        benchmark::DoNotOptimize(signature_curve(pair, D, (int)state.range(0), grid));
}

}  // namespace

BENCHMARK(BM_mul_serial)->Arg(128)->Arg(512);
BENCHMARK(BM_mul_parallel)->Arg(128)->Arg(512);
BENCHMARK(BM_box_rank_serial)->Arg(5)->Arg(25);
BENCHMARK(BM_box_rank_parallel)->Arg(5)->Arg(25);
BENCHMARK(BM_signature_curve)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
