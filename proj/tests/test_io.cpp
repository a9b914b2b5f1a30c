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

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "qwent/io.hpp"
#include "qwent/lon.hpp"

using namespace qwent;

TEST_CASE("state JSON round-trips bit for bit")
{
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;
    std::vector<Complex> v(basis_dimension(4, 2));
    for (auto& x : v) {
        x = Complex(gauss(rng), gauss(rng));
    }
    const StateVector s = normalize(4, 2, v);
    const std::string text = io::to_json(s).dump();
    const StateVector back = io::state_from_json(nlohmann::json::parse(text));
    REQUIRE(back.dimension() == s.dimension());
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        CHECK(back.amplitude(i) == s.amplitude(i));
    }
}

TEST_CASE("unitary JSON round-trips bit for bit")
{
    const ModeUnitary u = haar_random_unitary(5, 11);
    const ModeUnitary back = io::unitary_from_json(nlohmann::json::parse(io::to_json(u).dump()));
    CHECK(back.matrix() == u.matrix());
}

TEST_CASE("malformed JSON is rejected")
{
    CHECK_THROWS(io::state_from_json(nlohmann::json::parse(R"({"M": 2, "N": 1, "entries": [[[1, 1], 1, 0]]})")));
    CHECK_THROWS(io::unitary_from_json(nlohmann::json::parse(R"({"M": 2, "entries": [[1, 0]]})")));
}

TEST_CASE("shortest round-trip doubles")
{
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::numeric_limits<double>::denorm_min()}) {
        CHECK(std::strtod(io::format_double(x).c_str(), nullptr) == x);
    }
    CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("CSV quoting")
{
    std::ostringstream out;
    io::write_csv_row(out, {"a", "b,c", "say \"hi\""});
    CHECK(out.str() == "a,\"b,c\",\"say \"\"hi\"\"\"\n");
}
