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

#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "qwent/fock.hpp"

using namespace qwent;

TEST_CASE("basis dimension")
{
    CHECK(basis_dimension(2, 1) == 2);
    CHECK(basis_dimension(4, 2) == 10);
    CHECK(basis_dimension(6, 3) == 56);
    CHECK(basis_dimension(6, 3) == oracle::brute_force_basis(6, 3).size());
    CHECK(basis_dimension(5, 0) == 1);
    CHECK(basis_dimension(1, 7) == 1);

    for (int m = 1; m <= 6; ++m) {
        for (int n = 0; n <= 4; ++n) {
            CHECK(basis_dimension(m, n) == oracle::brute_force_basis(m, n).size());
        }
    }
}

TEST_CASE("basis dimension overflow is reported")
{
    CHECK_THROWS_AS(basis_dimension(200, 100), std::overflow_error);
    CHECK_THROWS_AS(binomial(10000, 5000), std::overflow_error);
    CHECK(binomial(62, 31) == 465428353255261088ULL);
}

TEST_CASE("rank and unrank are inverse bijections")
{
    for (int m = 1; m <= 6; ++m) {
        for (int n = 0; n <= 4; ++n) {
            const auto dim = basis_dimension(m, n);
            std::set<std::vector<int>> seen;
            for (std::uint64_t k = 0; k < dim; ++k) {
                const FockBasisState s = unrank(k, m, n);
                CHECK(s.photons() == n);
                CHECK(rank(s) == k);
                seen.emplace(s.occupations().begin(), s.occupations().end());
            }
            const auto brute = oracle::brute_force_basis(m, n);
            CHECK(seen == std::set<std::vector<int>>(brute.begin(), brute.end()));
        }
    }
}

TEST_CASE("documented order")
{
    const auto two = enumerate_basis(2, 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == FockBasisState({1, 0}));
    CHECK(two[1] == FockBasisState({0, 1}));

    const auto basis = enumerate_basis(3, 2);
    const std::vector<std::vector<int>> expected{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    REQUIRE(basis.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(basis[i] == FockBasisState(expected[i]));
    }
    for (int i = 0; i < 7; ++i) {
        std::vector<int> occ(7, 0);
        occ[static_cast<std::size_t>(i)] = 1;
        CHECK(rank(occ) == static_cast<std::uint64_t>(i));
    }
}

TEST_CASE("unrank rejects out-of-range indices")
{
    CHECK_THROWS_AS(unrank(10, 4, 2), std::out_of_range);
    CHECK_THROWS_AS(FockBasisState({1, -1}), std::invalid_argument);
}

TEST_CASE("state vectors validate their norm")
{
    CHECK_THROWS_AS(StateVector(2, 1, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(2, 1, {1.0}), std::invalid_argument);
    const StateVector s(2, 1, {Complex(0.6), Complex(0.0, 0.8)});
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.amplitude(FockBasisState({0, 1})) == Complex(0.0, 0.8));
}

TEST_CASE("normalize")
{
    const std::vector<Complex> a{2.0, 0.0};
    const StateVector s = normalize(2, 1, a);
    CHECK(s.amplitude(0) == Complex(1.0));
    CHECK(s.amplitude(1) == Complex(0.0));

    const std::vector<Complex> b{1.0, 1.0};
    const StateVector t = normalize(2, 1, b);
    CHECK(std::abs(t.amplitude(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(t.amplitude(1) - 1.0 / std::sqrt(2.0)) < 1e-15);

    const std::vector<Complex> zero{0.0, 0.0, 0.0};
    CHECK_THROWS_AS(normalize(3, 1, zero), std::invalid_argument);

    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 50; ++trial) {
        const auto dim = basis_dimension(4, 3);
        std::vector<Complex> v(dim);
        for (auto& x : v) {
            x = Complex(gauss(rng), gauss(rng));
        }
        const StateVector r = normalize(4, 3, v);
        CHECK(std::abs(r.norm() - 1.0) < 1e-14);
        // phases relative to the first entry are preserved
        for (std::size_t i = 1; i < dim; ++i) {
            const Complex ratio = v[i] / v[0];
            CHECK(std::abs(r.amplitude(i) / r.amplitude(0) - ratio) < 1e-12 * (1.0 + std::abs(ratio)));
        }
    }
}
