/*
 * Copyright 2026 The qwent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <omp.h>

#include <random>

#include "qwent/ensemble.hpp"
#include "qwent/lon.hpp"
#include "qwent/schmidt.hpp"
#include "qwent/walk.hpp"

using namespace qwent;

// The OpenMP kernels must reproduce the serial reference bit for bit,
// whatever the thread count.

TEST_CASE("walk step kernel")
{
    for (int threads : {1, 2, 4, 7}) {
        omp_set_num_threads(threads);
        for (int p : {5, 2048, 5001}) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(p));
            std::normal_distribution<double> gauss;
            std::vector<Complex> in(static_cast<std::size_t>(2 * p));
            for (auto& x : in) {
                x = Complex(gauss(rng), gauss(rng));
            }
            std::vector<Complex> a(in.size());
            std::vector<Complex> b(in.size());
            for (int k = 0; k < 5; ++k) {
                step_kernel(in, a, p, Coin::hadamard());
                serial::step_kernel(in, b, p, Coin::hadamard());
                CHECK(a == b);
                in = a;
            }
        }
    }
}

TEST_CASE("GME over bipartitions")
{
    for (int threads : {1, 3, 8}) {
        omp_set_num_threads(threads);
        for (int m : {3, 6, 9}) {
            const ModeUnitary u = haar_random_unitary(m, static_cast<std::uint64_t>(m));
            std::vector<int> occ(static_cast<std::size_t>(m), 0);
            occ[0] = 2;
            const StateVector s = apply_lon(u, StateVector::basis(FockBasisState(occ)));
            const GmeReport p = gme(s);
            const GmeReport q = serial::gme(s);
            CHECK(p.report.e_g == q.report.e_g);
            CHECK(p.argmin == q.argmin);
        }
    }
}

TEST_CASE("ensembles")
{
    for (int threads : {1, 4}) {
        omp_set_num_threads(threads);
        const auto w = sample_w_ensemble(50, 64, 3);
        const auto ws = serial::sample_w_ensemble(50, 64, 3);
        CHECK(w.values == ws.values);
        CHECK(w.mean == ws.mean);
        CHECK(w.p16 == ws.p16);
        const auto g = sample_gme_ensemble(5, 2, 32, 3);
        const auto gs = serial::sample_gme_ensemble(5, 2, 32, 3);
        CHECK(g.values == gs.values);
        CHECK(g.p84 == gs.p84);
    }
}
