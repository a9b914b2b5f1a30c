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

#include <chrono>
#include <cmath>
#include <map>
#include <random>

#include "oracles.hpp"
#include "qwent/lon.hpp"
#include "qwent/schmidt.hpp"
#include "qwent/walk.hpp"
#include "qwent/wstate.hpp"

using namespace qwent;

namespace {

std::map<oracle::Occupation, Complex> to_map(const StateVector& s)
{
    std::map<oracle::Occupation, Complex> out;
    const auto basis = enumerate_basis(s.modes(), s.photons());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out[{basis[i].occupations().begin(), basis[i].occupations().end()}] = s.amplitude(i);
    }
    return out;
}

StateVector random_state(int m, int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<Complex> v(basis_dimension(m, n));
    for (auto& x : v) {
        x = Complex(gauss(rng), gauss(rng));
    }
    return normalize(m, n, v);
}

StateVector permute_modes(const StateVector& s, const std::vector<int>& perm)
{
    std::vector<Complex> out(s.dimension());
    const auto basis = enumerate_basis(s.modes(), s.photons());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<int> occ(static_cast<std::size_t>(s.modes()));
        for (int k = 0; k < s.modes(); ++k) {
            occ[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = basis[i][k];
        }
        out[rank(occ)] = s.amplitude(i);
    }
    return StateVector(s.modes(), s.photons(), out);
}

}  // namespace

TEST_CASE("bipartitions")
{
    const auto all = canonical_bipartitions(4);
    REQUIRE(all.size() == 7);
    CHECK(all.front().left_mask() == 1);
    CHECK(all.back().left_mask() == 0b1101);
    for (const auto& b : all) {
        CHECK((b.left_mask() & 1U) == 1U);
    }
    CHECK(Bipartition(0b0101, 4).left_modes() == std::vector<int>{0, 2});
    CHECK(Bipartition(0b0101, 4).right_modes() == std::vector<int>{1, 3});
    CHECK_THROWS_AS(Bipartition(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Bipartition(0b111, 3), std::invalid_argument);
    CHECK_THROWS_AS(Bipartition(0b1000, 3), std::invalid_argument);
}

TEST_CASE("single-photon examples")
{
    const double h = 1.0 / std::sqrt(2.0);
    const StateVector bell(2, 1, {h, h});
    const auto r = g_max_bipartite(bell, Bipartition(1, 2));
    CHECK(std::abs(r.g_max - 0.5) < 1e-15);
    CHECK(std::abs(r.e_g - 0.5) < 1e-15);
    CHECK(r.branch == Branch::schmidt);
}

TEST_CASE("Hong-Ou-Mandel output")
{
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<Complex> amps(3);
    amps[rank(std::vector<int>{2, 0})] = h;
    amps[rank(std::vector<int>{0, 2})] = -h;
    const StateVector hom(2, 2, amps);
    const auto r = g_max_bipartite(hom, Bipartition(1, 2));
    CHECK(std::abs(r.e_g - 0.5) < 1e-12);
    CHECK(std::abs(oracle::bipartite_g_max(to_map(hom), 1) - 0.5) < 1e-12);

    const auto blocks = schmidt_blocks(hom, Bipartition(1, 2));
    REQUIRE(blocks.size() == 3);
    CHECK(std::abs(blocks[0].singular_values[0] - h) < 1e-15);
    CHECK(blocks[1].singular_values[0] == doctest::Approx(0.0));
    CHECK(std::abs(blocks[2].singular_values[0] - h) < 1e-15);
}

TEST_CASE("product states have no bipartite entanglement")
{
    const StateVector s = StateVector::basis(FockBasisState({3, 0, 0, 0}));
    for (const auto& b : canonical_bipartitions(4)) {
        CHECK(g_max_bipartite(s, b).e_g == doctest::Approx(0.0).epsilon(1e-15));
    }
    CHECK(gme(StateVector::basis(FockBasisState({1, 2, 0, 1}))).report.e_g == doctest::Approx(0.0));
}

TEST_CASE("blockwise Schmidt agrees with the explicit partial trace")
{
    for (int m = 2; m <= 5; ++m) {
        for (int n = 1; n <= 3; ++n) {
            const StateVector s = random_state(m, n, static_cast<std::uint64_t>(m * 10 + n));
            const auto as_map = to_map(s);
            for (const auto& b : canonical_bipartitions(m)) {
                const auto blocks = schmidt_blocks(s, b);
                double total = 0.0;
                for (const auto& block : blocks) {
                    for (double sigma : block.singular_values) {
                        total += sigma * sigma;
                    }
                }
                CHECK(std::abs(total - 1.0) < 1e-10);
                CHECK(std::abs(g_max_bipartite(s, b).g_max - oracle::bipartite_g_max(as_map, b.left_mask())) < 1e-12);
            }
        }
    }
}

TEST_CASE("single-photon Schmidt matches the W-state solver")
{
    const auto lambda = random_sphere_point(6, 17);
    std::vector<Complex> amps(lambda.begin(), lambda.end());
    const StateVector s = StateVector::single_photon(amps);
    for (const auto& b : canonical_bipartitions(6)) {
        const Partition p({b.left_modes(), b.right_modes()}, 6);
        CHECK(std::abs(g_max_bipartite(s, b).e_g - e_g(amps, p).e_g) < 1e-12);
    }
}

TEST_CASE("mode permutation invariance")
{
    const StateVector s = random_state(5, 2, 3);
    const std::vector<int> perm{3, 0, 4, 1, 2};
    const StateVector t = permute_modes(s, perm);
    for (const auto& b : canonical_bipartitions(5)) {
        std::uint64_t mask = 0;
        for (int mode : b.left_modes()) {
            mask |= std::uint64_t{1} << perm[static_cast<std::size_t>(mode)];
        }
        CHECK(std::abs(g_max_bipartite(s, b).e_g - g_max_bipartite(t, Bipartition(mask, 5)).e_g) < 1e-12);
    }
}

TEST_CASE("GME of the symmetric W state on three modes")
{
    const double a = 1.0 / std::sqrt(3.0);
    const StateVector w(3, 1, {a, a, a});
    const GmeReport g = gme(w);
    CHECK(std::abs(g.report.e_g - 1.0 / 3.0) < 1e-10);
    for (const auto& b : canonical_bipartitions(3)) {
        CHECK(std::abs(g_max_bipartite(w, b).g_max - 2.0 / 3.0) < 1e-12);
    }
    // all three bipartitions tie: the first in canonical order wins
    CHECK(g.argmin.left_mask() == 1);
}

TEST_CASE("GME minimizes over bipartitions")
{
    const StateVector s = random_state(5, 2, 21);
    const GmeReport g = gme(s);
    double best = 1.0;
    std::uint64_t best_mask = 0;
    for (const auto& b : canonical_bipartitions(5)) {
        const double value = 1.0 - oracle::bipartite_g_max(to_map(s), b.left_mask());
        if (value < best) {
            best = value;
            best_mask = b.left_mask();
        }
    }
    CHECK(std::abs(g.report.e_g - best) < 1e-12);
    CHECK(g.argmin.left_mask() == best_mask);
}

TEST_CASE("walk on the line has no GME")
{
    WalkConfig cfg;
    cfg.topology = Topology::line;
    cfg.steps = 3;
    const int p = effective_positions(cfg);
    REQUIRE(2 * p <= kDefaultGmeModeCap);
    evolve({0.7, 0.2}, cfg, cfg.steps, [&](int, std::span<const Complex> amps) {
        CHECK(gme(StateVector::single_photon(amps)).report.e_g < 1e-15);
    });
}

TEST_CASE("GME mode cap")
{
    std::vector<int> occ(17, 0);
    occ[0] = 1;
    CHECK_THROWS_AS(gme(StateVector::basis(FockBasisState(occ))), std::invalid_argument);
    CHECK_NOTHROW(gme(StateVector::basis(FockBasisState({1, 0, 0})), 3));
}

TEST_CASE("per-bipartition cost stays within the predicted scaling")
{
    auto best_time = [](int m, int n) {
        const StateVector s = random_state(m, n, 5);
        std::uint64_t mask = (std::uint64_t{1} << (m / 2)) - 1;
        const Bipartition b(mask, m);
        double best = 1e300;
        for (int rep = 0; rep < 5; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            (void)g_max_bipartite(s, b);
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        }
        return best;
    };
    const double small = best_time(8, 2);
    const double large = best_time(12, 4);
    const double predicted = std::pow(static_cast<double>(binomial(5 + 2, 2)), 3) /
                             std::pow(static_cast<double>(binomial(3 + 1, 1)), 3);
    CHECK(large / small <= 50.0 * predicted);
}
