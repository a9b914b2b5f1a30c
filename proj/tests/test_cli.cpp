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
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qwent/analytic.hpp"
#include "qwent/cli.hpp"
#include "qwent/ensemble.hpp"
#include "qwent/io.hpp"
#include "qwent/wstate.hpp"

using namespace qwent;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

using Table = std::vector<std::vector<std::string>>;

Table parse_csv(const std::string& text)
{
    Table rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::stringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            row.push_back(field);
        }
        rows.push_back(row);
    }
    return rows;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name)
{
    const fs::path dir(QWENT_TEST_TMPDIR);
    fs::create_directories(dir);
    return dir / name;
}

double num(const std::string& s)
{
    return std::stod(s);
}

}  // namespace

TEST_CASE("usage errors")
{
    CHECK(invoke({}).code == cli::kArgumentError);
    CHECK(invoke({"walk", "--steps", "3", "--bogus"}).code == cli::kArgumentError);
    CHECK(invoke({"walk", "--steps", "3", "--positions", "4", "--partition", "nope"}).code == cli::kArgumentError);
    CHECK(invoke({"walk", "--steps", "x"}).code == cli::kArgumentError);
    CHECK(invoke({"walk", "--steps", "3"}).code == cli::kArgumentError);  // circle needs positions
    CHECK(invoke({"wstate", "--amplitudes", "1,1"}).code == cli::kArgumentError);
    CHECK(invoke({"wstate", "--uniform", "3", "--amplitudes", "1"}).code == cli::kArgumentError);
    CHECK(invoke({"analytic", "--quantity", "entropy", "--theta", "1"}).code == cli::kArgumentError);
    CHECK(invoke({"gme", "--modes", "20"}).code == cli::kArgumentError);
    CHECK(invoke({"wstate", "--file", "/nonexistent/state.json"}).code != cli::kOk);
    const Outcome help = invoke({"--help"});
    CHECK(help.code == cli::kOk);
    CHECK(help.out.find("walk") != std::string::npos);
    CHECK(invoke({"--version"}).out.find(cli::kVersion) != std::string::npos);
}

TEST_CASE("walk output")
{
    const Outcome r = invoke({"walk", "--positions", "4", "--steps", "12"});
    REQUIRE(r.code == cli::kOk);
    const Table t = parse_csv(r.out);
    REQUIRE(t.size() == 14);
    CHECK(t[0] == std::vector<std::string>{"step", "E_g"});
    for (std::size_t n = 1; n + 4 < t.size(); ++n) {
        CHECK(t[n][1] == t[n + 4][1]);
    }

    const Outcome coin = invoke({"walk", "--topology", "line", "--steps", "20", "--partition", "coin", "--theta",
                                 "0.7", "--phi", "1.3"});
    const Table c = parse_csv(coin.out);
    CHECK(c[0] == std::vector<std::string>{"step", "E_g", "phi1"});
    for (int n = 1; n <= 20; ++n) {
        CHECK(std::abs(num(c[static_cast<std::size_t>(n) + 1][2]) - phi1(n, 0.7, 1.3)) < 1e-12);
    }
}

TEST_CASE("line versus circle comparison")
{
    const Outcome r = invoke({"walk", "--positions", "64", "--steps", "40", "--partition", "coin", "--compare-line"});
    const Table t = parse_csv(r.out);
    CHECK(t[0] == std::vector<std::string>{"step", "E_g", "phi1", "E_g_line", "delta"});
    for (int n = 0; n <= 32; ++n) {
        CHECK(std::abs(num(t[static_cast<std::size_t>(n) + 1][4])) < 1e-12);
    }
    const double d33 = std::abs(num(t[34][4]));
    const double d34 = std::abs(num(t[35][4]));
    CHECK(d33 > 1e-11);
    CHECK(d33 < 1e-9);
    CHECK(d34 > d33);
}

TEST_CASE("minima report")
{
    const fs::path minima = scratch("minima.csv");
    const Outcome r = invoke({"walk", "--positions", "30", "--steps", "60", "--minima-out", minima.string()});
    REQUIRE(r.code == cli::kOk);
    const Table t = parse_csv(slurp(minima));
    CHECK(t[0] == std::vector<std::string>{"step", "E_g", "spacing"});
    CHECK(t.size() > 2);
}

TEST_CASE("sweep over theta and phi")
{
    SUBCASE("P=5, n=4: maximum lies near the great circle")
    {
        const Outcome r = invoke({"sweep-ic", "--positions", "5", "--steps", "4", "--grid-theta", "33", "--grid-phi",
                                  "64"});
        const Table t = parse_csv(r.out);
        CHECK(t[0] == std::vector<std::string>{"theta", "phi", "E_g", "contour_residual"});
        double best = -1.0;
        double residual = 0.0;
        double near_contour_best = -1.0;
        for (std::size_t i = 1; i < t.size(); ++i) {
            const double eg = num(t[i][2]);
            if (eg > best) {
                best = eg;
                residual = num(t[i][3]);
            }
            if (std::abs(num(t[i][3])) < 0.1) {
                near_contour_best = std::max(near_contour_best, eg);
            }
        }
        CHECK(std::abs(residual) < 0.1);
        CHECK(near_contour_best == best);
    }

    SUBCASE("theta = phi = pi/2 attains the grid maximum")
    {
        for (int p : {3, 5, 8}) {
            for (int n : {2, 3, 4, 7}) {
                const Outcome r = invoke({"sweep-ic", "--positions", std::to_string(p), "--steps", std::to_string(n),
                                          "--grid-theta", "17", "--grid-phi", "16"});
                const Table t = parse_csv(r.out);
                double best = -1.0;
                double at_symmetric = -1.0;
                for (std::size_t i = 1; i < t.size(); ++i) {
                    const double eg = num(t[i][2]);
                    best = std::max(best, eg);
                    if (std::abs(num(t[i][0]) - std::numbers::pi / 2) < 1e-12 &&
                        std::abs(num(t[i][1]) - std::numbers::pi / 2) < 1e-12) {
                        at_symmetric = eg;
                    }
                }
                REQUIRE(at_symmetric >= 0.0);
                CHECK(at_symmetric >= best - 1e-12);
            }
        }
    }
}

TEST_CASE("sweep over theta and n")
{
    const Outcome r = invoke({"sweep-ic", "--positions", "3", "--steps", "30", "--mode", "theta-n", "--phi",
                              io::format_double(std::numbers::pi / 2), "--grid-theta", "21"});
    const Table t = parse_csv(r.out);
    CHECK(t[0] == std::vector<std::string>{"theta", "n", "E_g"});
    // rows are theta-major; E_g(n) must not decrease with theta
    const std::size_t steps = 31;
    for (std::size_t n = 0; n < steps; ++n) {
        for (std::size_t i = 1; i < 21; ++i) {
            const double lower = num(t[1 + (i - 1) * steps + n][2]);
            const double upper = num(t[1 + i * steps + n][2]);
            CHECK(upper >= lower - 1e-12);
        }
    }
}

TEST_CASE("analytic output round-trips library values")
{
    const Outcome r = invoke({"analytic", "--n-max", "40", "--theta", "0.3", "--phi", "2"});
    const Table t = parse_csv(r.out);
    REQUIRE(t.size() == 41);
    for (int n = 1; n <= 40; ++n) {
        CHECK(num(t[static_cast<std::size_t>(n)][1]) == phi1(n, 0.3, 2.0));
    }
    const Table e = parse_csv(invoke({"analytic", "--n-max", "5", "--quantity", "entropy"}).out);
    CHECK(num(e[1][1]) == von_neumann_entropy(1).entropy);
    const Table a = parse_csv(invoke({"analytic", "--quantity", "asymptotic"}).out);
    CHECK(a[1][0] == "inf");
    CHECK(num(a[1][1]) == asymptotic_phi1(0.0, 0.0));
    const Table g = parse_csv(invoke({"analytic", "--quantity", "asymptotic-grid", "--grid", "5"}).out);
    CHECK(g.size() == 1 + 5 * 10);
}

TEST_CASE("wstate reports")
{
    const auto j = nlohmann::json::parse(invoke({"wstate", "--uniform", "3"}).out);
    CHECK(std::abs(j["E_g"].get<double>() - 5.0 / 9.0) < 1e-14);
    CHECK(j["branch"] == "F1-root");
    CHECK(j["xi0"].is_number());

    const auto s = nlohmann::json::parse(invoke({"wstate", "--amplitudes", "0.6,0.8"}).out);
    CHECK(s["g_max"].get<double>() == g_max_full(WState({0.6, 0.8})).g_max);
    CHECK(s["branch"] == "simple");
    CHECK(s["xi0"].is_null());

    const fs::path file = scratch("amps.json");
    io::write_text_file(file, "[[0, 0.6], [0.8, 0]]");
    const auto f = nlohmann::json::parse(invoke({"wstate", "--file", file.string()}).out);
    CHECK(f["g_max"].get<double>() == s["g_max"].get<double>());

    const auto part = nlohmann::json::parse(invoke({"wstate", "--uniform", "4", "--partition", "0,1;2,3"}).out);
    CHECK(std::abs(part["E_g"].get<double>() - 0.5) < 1e-15);
}

TEST_CASE("gme reports")
{
    const fs::path file = scratch("w3.json");
    const double a = 1.0 / std::sqrt(3.0);
    io::write_text_file(file, io::to_json(StateVector(3, 1, {a, a, a})).dump());
    const Table t = parse_csv(invoke({"gme", "--state", file.string()}).out);
    CHECK(t[0] == std::vector<std::string>{"sample", "G_g", "argmin_bipartition_bitmask"});
    CHECK(std::abs(num(t[1][1]) - 1.0 / 3.0) < 1e-10);
    CHECK(t[1][2] == "1");

    const Table g = parse_csv(invoke({"gme", "--modes", "5", "--photons", "2", "--samples", "6", "--seed", "9"}).out);
    const EnsembleSummary s = sample_gme_ensemble(5, 2, 6, 9);
    REQUIRE(g.size() == 7);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(num(g[k + 1][1]) == s.values[k]);
    }

    const fs::path ufile = scratch("bs.json");
    ComplexMatrix bs(2, 2);
    bs << 1.0, 1.0, 1.0, -1.0;
    io::write_text_file(ufile, io::to_json(ModeUnitary(bs / std::sqrt(2.0))).dump());
    const Table hom = parse_csv(invoke({"gme", "--modes", "2", "--photons", "2", "--initial", "ones", "--unitary",
                                        ufile.string()}).out);
    CHECK(std::abs(num(hom[1][1]) - 0.5) < 1e-12);
}

TEST_CASE("ensemble output, manifest and replay")
{
    const fs::path out = scratch("ens.csv");
    const fs::path raw = scratch("ens_raw.csv");
    const fs::path fit = scratch("fit.json");
    const Outcome r = invoke({"ensemble", "--modes", "10,50,100", "--samples", "40", "--seed", "5", "--out",
                              out.string(), "--raw", raw.string(), "--fit-out", fit.string(), "--fit-min-M", "10"});
    REQUIRE(r.code == cli::kOk);
    const Table t = parse_csv(slurp(out));
    CHECK(t[0] == std::vector<std::string>{"M", "N", "samples", "mean", "p16", "p84"});
    const EnsembleSummary s = sample_w_ensemble(50, 40, 5);
    CHECK(num(t[2][3]) == s.mean);
    CHECK(num(t[2][4]) == s.p16);
    CHECK(parse_csv(slurp(raw)).size() == 1 + 3 * 40);
    CHECK(nlohmann::json::parse(slurp(fit))["points"] == 3);

    const auto manifest = nlohmann::json::parse(slurp(out.string() + ".manifest.json"));
    CHECK(manifest["subcommand"] == "ensemble");
    CHECK(manifest["seed"] == 5);
    CHECK(manifest["csv_schema"] == "qwent-ensemble/1");
    CHECK(manifest["outputs"].size() == 3);
    CHECK(manifest["parameters"]["samples"] == "40");
    CHECK(manifest.contains("wall_time_seconds"));

    const fs::path again = scratch("ens_again.csv");
    CHECK(invoke({"replay", out.string() + ".manifest.json", "--out", again.string()}).code == cli::kOk);
    CHECK(slurp(again) == slurp(out));

    const fs::path gme_out = scratch("gme.csv");
    invoke({"gme", "--modes", "4", "--photons", "2", "--samples", "5", "--out", gme_out.string()});
    const std::string first = slurp(gme_out);
    fs::remove(gme_out);
    CHECK(invoke({"replay", gme_out.string() + ".manifest.json"}).code == cli::kOk);
    CHECK(slurp(gme_out) == first);
}

TEST_CASE("thread count does not change results")
{
    const std::string one = invoke({"--threads", "1", "ensemble", "--modes", "30", "--samples", "50"}).out;
    const std::string four = invoke({"--threads", "4", "ensemble", "--modes", "30", "--samples", "50"}).out;
    CHECK(one == four);
}
