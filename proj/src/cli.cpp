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

#include "qwent/cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qwent/analytic.hpp"
#include "qwent/ensemble.hpp"
#include "qwent/error.hpp"
#include "qwent/io.hpp"
#include "qwent/lon.hpp"
#include "qwent/rng.hpp"
#include "qwent/schmidt.hpp"
#include "qwent/walk.hpp"
#include "qwent/wstate.hpp"

namespace qwent::cli {

namespace {

using nlohmann::json;
using io::format_double;
using io::write_csv_row;

constexpr const char* kThreadsEnv = "QWENT_NUM_THREADS";

enum class PartitionKind { full, coin, position };

PartitionKind parse_partition_kind(const std::string& name)
{
    if (name == "full") {
        return PartitionKind::full;
    }
    if (name == "coin") {
        return PartitionKind::coin;
    }
    if (name == "position") {
        return PartitionKind::position;
    }
    throw std::invalid_argument("unknown partition '" + name + "' (expected full, coin or position)");
}

Topology parse_topology(const std::string& name)
{
    if (name == "circle") {
        return Topology::circle;
    }
    if (name == "line") {
        return Topology::line;
    }
    throw std::invalid_argument("unknown topology '" + name + "' (expected circle or line)");
}

InitialState parse_initial(const std::string& name)
{
    if (name == "N0") {
        return InitialState::n0;
    }
    if (name == "ones") {
        return InitialState::ones;
    }
    throw std::invalid_argument("unknown initial state '" + name + "' (expected N0 or ones)");
}

// What a subcommand produced: primary data (CSV or JSON text) plus any
// side files, all recorded in the manifest.
struct Result {
    std::string data;
    std::string schema;
    std::optional<std::uint64_t> seed;
    std::vector<std::pair<std::string, std::string>> side_files;  // path, content
    json extra = json::object();
};

// ---------------------------------------------------------------- walk

struct WalkSeries {
    std::vector<double> e_g;
    std::vector<double> phi1;
};

WalkSeries walk_series(const WalkConfig& config, const CoinInitialState& initial, PartitionKind kind)
{
    WalkEngine engine(config, initial);
    const int p = engine.positions();
    std::optional<Partition> partition;
    if (kind == PartitionKind::coin) {
        partition = Partition::coin(p);
    } else if (kind == PartitionKind::position) {
        partition = Partition::position(p);
    }
    WalkSeries s;
    s.e_g.reserve(static_cast<std::size_t>(config.steps) + 1);
    for (int n = 0; n <= config.steps; ++n) {
        const auto amps = engine.amplitudes();
        s.e_g.push_back(partition ? e_g(amps, *partition).e_g : e_g_full(amps).e_g);
        s.phi1.push_back(coin_partition_weights(amps, p).plus);
        if (n < config.steps) {
            engine.step();
        }
    }
    return s;
}

struct WalkOptions {
    int positions = 0;
    int steps = 0;
    double theta = 0.0;
    double phi = 0.0;
    std::string topology = "circle";
    std::string partition = "full";
    bool compare_line = false;
    std::string minima_out;
};

WalkConfig make_config(int positions, int steps, const std::string& topology)
{
    WalkConfig cfg;
    cfg.topology = parse_topology(topology);
    cfg.positions = positions;
    cfg.steps = steps;
    if (cfg.topology == Topology::circle && positions < 1) {
        throw std::invalid_argument("--positions >= 1 is required on a circle");
    }
    if (steps < 0) {
        throw std::invalid_argument("--steps must be non-negative");
    }
    return cfg;
}

Result run_walk(const WalkOptions& o)
{
    const WalkConfig cfg = make_config(o.positions, o.steps, o.topology);
    const PartitionKind kind = parse_partition_kind(o.partition);
    const CoinInitialState ic{o.theta, o.phi};
    const WalkSeries series = walk_series(cfg, ic, kind);
    std::optional<WalkSeries> line;
    if (o.compare_line) {
        WalkConfig line_cfg = cfg;
        line_cfg.topology = Topology::line;
        line_cfg.positions = 0;
        line = walk_series(line_cfg, ic, kind);
    }

    std::ostringstream csv;
    std::vector<std::string> header{"step", "E_g"};
    if (kind == PartitionKind::coin) {
        header.emplace_back("phi1");
    }
    if (line) {
        header.insert(header.end(), {"E_g_line", "delta"});
    }
    write_csv_row(csv, header);
    for (std::size_t n = 0; n < series.e_g.size(); ++n) {
        std::vector<std::string> row{std::to_string(n), format_double(series.e_g[n])};
        if (kind == PartitionKind::coin) {
            row.push_back(format_double(series.phi1[n]));
        }
        if (line) {
            row.push_back(format_double(line->e_g[n]));
            row.push_back(format_double(series.e_g[n] - line->e_g[n]));
        }
        write_csv_row(csv, row);
    }

    Result r{csv.str(), "qwent-walk/1", std::nullopt, {}, json::object()};
    r.extra["effective_positions"] = effective_positions(cfg);
    if (!o.minima_out.empty()) {
        std::ostringstream minima;
        write_csv_row(minima, {"step", "E_g", "spacing"});
        std::size_t previous = 0;
        bool first = true;
        for (std::size_t n : local_minima(series.e_g)) {
            write_csv_row(minima, {std::to_string(n), format_double(series.e_g[n]),
                                   first ? std::string() : std::to_string(n - previous)});
            previous = n;
            first = false;
        }
        r.side_files.emplace_back(o.minima_out, minima.str());
    }
    return r;
}

// ---------------------------------------------------------------- sweep-ic

struct SweepOptions {
    int positions = 0;
    int steps = 0;
    std::string topology = "circle";
    std::string partition = "full";
    std::string mode = "theta-phi";
    int grid_theta = 33;
    int grid_phi = 64;
    double theta_max = -1.0;
    double phi = std::numbers::pi / 2.0;
};

Result run_sweep(const SweepOptions& o)
{
    const WalkConfig cfg = make_config(o.positions, o.steps, o.topology);
    const PartitionKind kind = parse_partition_kind(o.partition);
    const bool theta_phi = (o.mode == "theta-phi");
    if (!theta_phi && o.mode != "theta-n") {
        throw std::invalid_argument("unknown sweep mode '" + o.mode + "' (expected theta-phi or theta-n)");
    }
    if (o.grid_theta < 2 || o.grid_phi < 1) {
        throw std::invalid_argument("sweep grid needs at least 2 theta and 1 phi points");
    }
    const double theta_max = (o.theta_max >= 0.0) ? o.theta_max : (theta_phi ? std::numbers::pi : std::numbers::pi / 2);
    const int n_theta = o.grid_theta;
    const int n_phi = theta_phi ? o.grid_phi : 1;
    auto theta_at = [&](int i) { return theta_max * i / (n_theta - 1); };
    auto phi_at = [&](int j) { return theta_phi ? 2.0 * std::numbers::pi * j / n_phi : o.phi; };

    const int points = n_theta * n_phi;
    std::vector<WalkSeries> results(static_cast<std::size_t>(points));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < points; ++k) {
        results[static_cast<std::size_t>(k)] = walk_series(cfg, {theta_at(k / n_phi), phi_at(k % n_phi)}, kind);
    }

    std::ostringstream csv;
    if (theta_phi) {
        write_csv_row(csv, {"theta", "phi", "E_g", "contour_residual"});
        for (int k = 0; k < points; ++k) {
            const double th = theta_at(k / n_phi);
            const double ph = phi_at(k % n_phi);
            write_csv_row(csv, {format_double(th), format_double(ph),
                                format_double(results[static_cast<std::size_t>(k)].e_g.back()),
                                format_double(contour_residual(th, ph))});
        }
    } else {
        write_csv_row(csv, {"theta", "n", "E_g"});
        for (int i = 0; i < n_theta; ++i) {
            const auto& s = results[static_cast<std::size_t>(i)].e_g;
            for (std::size_t n = 0; n < s.size(); ++n) {
                write_csv_row(csv, {format_double(theta_at(i)), std::to_string(n), format_double(s[n])});
            }
        }
    }
    return Result{csv.str(), theta_phi ? "qwent-sweep-theta-phi/1" : "qwent-sweep-theta-n/1", std::nullopt, {},
                  json::object()};
}

// ---------------------------------------------------------------- analytic

struct AnalyticOptions {
    int n_max = 100;
    double theta = 0.0;
    double phi = 0.0;
    std::string quantity = "phi1";
    int grid = 64;
};

Result run_analytic(const AnalyticOptions& o)
{
    std::ostringstream csv;
    if (o.quantity == "asymptotic") {
        write_csv_row(csv, {"n", "value"});
        write_csv_row(csv, {"inf", format_double(asymptotic_phi1(o.theta, o.phi))});
        return Result{csv.str(), "qwent-analytic/1", std::nullopt, {}, json::object()};
    }
    if (o.quantity == "asymptotic-grid") {
        if (o.grid < 2) {
            throw std::invalid_argument("--grid must be at least 2");
        }
        write_csv_row(csv, {"theta", "phi", "phi1_inf", "E_g_inf", "contour_residual"});
        for (int i = 0; i < o.grid; ++i) {
            const double th = std::numbers::pi * i / (o.grid - 1);
            for (int j = 0; j < 2 * o.grid; ++j) {
                const double ph = std::numbers::pi * j / o.grid;
                const double p1 = asymptotic_phi1(th, ph);
                write_csv_row(csv, {format_double(th), format_double(ph), format_double(p1),
                                    format_double(std::min(p1, 1.0 - p1)), format_double(contour_residual(th, ph))});
            }
        }
        return Result{csv.str(), "qwent-analytic-grid/1", std::nullopt, {}, json::object()};
    }
    if (o.n_max < 1) {
        throw std::invalid_argument("--n-max must be at least 1");
    }
    const SeriesCache cache(o.n_max + 1);
    write_csv_row(csv, {"n", "value"});
    if (o.quantity == "phi1" || o.quantity == "eg") {
        const bool eg = (o.quantity == "eg");
        for (int n = 1; n <= o.n_max; ++n) {
            const double v = eg ? e_g_coin_line(cache, n, o.theta, o.phi) : phi1(cache, n, o.theta, o.phi);
            write_csv_row(csv, {std::to_string(n), format_double(v)});
        }
    } else if (o.quantity == "entropy") {
        if (o.theta != 0.0 || o.phi != 0.0) {
            throw std::invalid_argument("the closed-form entropy covers the |-,0> start only (theta = phi = 0)");
        }
        for (int n = 1; n <= o.n_max; ++n) {
            write_csv_row(csv, {std::to_string(n), format_double(von_neumann_entropy(cache, n).entropy)});
        }
    } else {
        throw std::invalid_argument("unknown quantity '" + o.quantity + "'");
    }
    return Result{csv.str(), "qwent-analytic/1", std::nullopt, {}, json::object()};
}

// ---------------------------------------------------------------- wstate

struct WStateOptions {
    int uniform = 0;
    std::string file;
    std::string amplitudes;
    std::string partition;
};

std::vector<Complex> amplitudes_from_json(const json& j)
{
    std::vector<Complex> out;
    if (j.is_object()) {
        const StateVector s = io::state_from_json(j);
        if (s.photons() != 1) {
            throw std::invalid_argument("wstate input must be a single-photon state");
        }
        return {s.amplitudes().begin(), s.amplitudes().end()};
    }
    if (!j.is_array()) {
        throw std::invalid_argument("wstate file must hold an array of amplitudes or a state object");
    }
    for (const auto& e : j) {
        if (e.is_number()) {
            out.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2) {
            out.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw std::invalid_argument("amplitude entries must be numbers or [re, im] pairs");
        }
    }
    return out;
}

std::vector<double> parse_number_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            out.push_back(std::stod(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0) {
            throw std::invalid_argument("cannot parse number '" + item + "'");
        }
    }
    return out;
}

// "0,1;2,3" -> {{0,1},{2,3}}
Partition parse_partition_spec(const std::string& text, int modes)
{
    std::vector<std::vector<int>> blocks;
    std::stringstream ss(text);
    std::string block;
    while (std::getline(ss, block, ';')) {
        std::vector<int> idx;
        for (double v : parse_number_list(block)) {
            if (v != std::floor(v)) {
                throw std::invalid_argument("partition indices must be integers");
            }
            idx.push_back(static_cast<int>(v));
        }
        blocks.push_back(std::move(idx));
    }
    return Partition(std::move(blocks), modes);
}

json report_to_json(const EntanglementReport& r)
{
    json j;
    j["g_max"] = r.g_max;
    j["E_g"] = r.e_g;
    j["branch"] = std::string(to_string(r.branch));
    j["xi0"] = r.xi0 ? json(*r.xi0) : json(nullptr);
    j["root_residual"] = r.root_residual ? json(*r.root_residual) : json(nullptr);
    return j;
}

Result run_wstate(const WStateOptions& o)
{
    const int sources = (o.uniform > 0) + !o.file.empty() + !o.amplitudes.empty();
    if (sources != 1) {
        throw std::invalid_argument("give exactly one of --uniform, --file, --amplitudes");
    }
    std::vector<Complex> amps;
    if (o.uniform > 0) {
        amps.assign(static_cast<std::size_t>(o.uniform), Complex(1.0 / std::sqrt(static_cast<double>(o.uniform))));
    } else if (!o.file.empty()) {
        amps = amplitudes_from_json(io::read_json_file(o.file));
    } else {
        for (double v : parse_number_list(o.amplitudes)) {
            amps.emplace_back(v, 0.0);
        }
    }
    if (amps.empty()) {
        throw std::invalid_argument("no amplitudes given");
    }
    const int m = static_cast<int>(amps.size());
    const Partition partition = o.partition.empty() ? Partition::full(m) : parse_partition_spec(o.partition, m);
    const EntanglementReport report = e_g(amps, partition);
    json j = report_to_json(report);
    j["M"] = m;
    j["partition_blocks"] = partition.size();
    return Result{j.dump() + "\n", "qwent-wstate/1", std::nullopt, {}, json::object()};
}

// ---------------------------------------------------------------- gme

struct GmeOptions {
    int modes = 4;
    int photons = 1;
    std::uint64_t seed = 1;
    int samples = 1;
    std::string initial = "N0";
    std::string unitary;
    std::string state;
};

StateVector initial_state(int modes, int photons, InitialState initial)
{
    std::vector<int> occ(static_cast<std::size_t>(modes), 0);
    if (initial == InitialState::n0) {
        occ[0] = photons;
    } else {
        if (photons > modes) {
            throw std::invalid_argument("initial state ones requires M >= N");
        }
        std::fill_n(occ.begin(), photons, 1);
    }
    return StateVector::basis(FockBasisState(std::move(occ)));
}

Result run_gme(const GmeOptions& o)
{
    std::ostringstream csv;
    write_csv_row(csv, {"sample", "G_g", "argmin_bipartition_bitmask"});
    auto emit = [&](int sample, const GmeReport& g) {
        write_csv_row(csv, {std::to_string(sample), format_double(g.report.e_g), std::to_string(g.argmin.left_mask())});
    };
    if (!o.state.empty()) {
        emit(0, gme(io::state_from_json(io::read_json_file(o.state))));
        return Result{csv.str(), "qwent-gme/1", std::nullopt, {}, json::object()};
    }
    if (o.modes < 2 || o.photons < 1 || o.samples < 1) {
        throw std::invalid_argument("gme needs --modes >= 2, --photons >= 1, --samples >= 1");
    }
    if (o.modes > kDefaultGmeModeCap) {
        throw std::invalid_argument("--modes exceeds the GME cap of " + std::to_string(kDefaultGmeModeCap));
    }
    const StateVector input = initial_state(o.modes, o.photons, parse_initial(o.initial));
    if (!o.unitary.empty()) {
        const ModeUnitary u = io::unitary_from_json(io::read_json_file(o.unitary));
        emit(0, gme(apply_lon(u, input)));
        return Result{csv.str(), "qwent-gme/1", std::nullopt, {}, json::object()};
    }
    for (int k = 0; k < o.samples; ++k) {
        Rng rng = substream(o.seed, static_cast<std::uint64_t>(k));
        const ModeUnitary u = haar_random_unitary(o.modes, rng);
        emit(k, gme(apply_lon(u, input)));
    }
    return Result{csv.str(), "qwent-gme/1", o.seed, {}, json::object()};
}

// ---------------------------------------------------------------- ensemble

struct EnsembleOptions {
    std::string mode = "wstate";
    std::vector<int> modes{10};
    int photons = 1;
    int samples = 500;
    std::uint64_t seed = 1;
    std::string initial = "N0";
    std::string raw;
    std::string fit_out;
    double fit_min_m = 50.0;
};

Result run_ensemble(const EnsembleOptions& o)
{
    const bool wstate = (o.mode == "wstate");
    if (!wstate && o.mode != "gme") {
        throw std::invalid_argument("unknown ensemble mode '" + o.mode + "' (expected wstate or gme)");
    }
    std::ostringstream csv;
    std::ostringstream raw;
    write_csv_row(csv, {"M", "N", "samples", "mean", "p16", "p84"});
    write_csv_row(raw, {"M", "N", "sample", "value"});
    std::vector<std::pair<double, double>> gaps;
    for (int m : o.modes) {
        const EnsembleSummary s = wstate ? sample_w_ensemble(m, o.samples, o.seed)
                                         : sample_gme_ensemble(m, o.photons, o.samples, o.seed, parse_initial(o.initial));
        write_csv_row(csv, {std::to_string(s.modes), std::to_string(s.photons), std::to_string(s.samples),
                            format_double(s.mean), format_double(s.p16), format_double(s.p84)});
        for (std::size_t k = 0; k < s.values.size(); ++k) {
            write_csv_row(raw, {std::to_string(s.modes), std::to_string(s.photons), std::to_string(k),
                                format_double(s.values[k])});
        }
        if (wstate) {
            gaps.emplace_back(m, e_g_max(m) - s.mean);
        }
    }
    Result r{csv.str(), "qwent-ensemble/1", o.seed, {}, json::object()};
    if (!o.raw.empty()) {
        r.side_files.emplace_back(o.raw, raw.str());
    }
    if (!o.fit_out.empty()) {
        if (!wstate) {
            throw std::invalid_argument("--fit-out applies to the wstate ensemble");
        }
        const PowerLawFit fit = fit_power_law(gaps, o.fit_min_m);
        json j{{"exponent", fit.exponent},
               {"prefactor", fit.prefactor},
               {"r_squared", fit.r_squared},
               {"fit_range_min_M", fit.fit_range_min_M},
               {"points", fit.points}};
        r.side_files.emplace_back(o.fit_out, j.dump(2) + "\n");
        r.extra["fit"] = j;
    }
    return r;
}

// ---------------------------------------------------------------- driver

int default_threads()
{
    if (const char* env = std::getenv(kThreadsEnv)) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 0;
}

json build_manifest(const std::vector<std::string>& args, const std::string& subcommand, const CLI::App& sub,
                    const Result& r, const std::vector<std::string>& outputs, double seconds)
{
    json m;
    m["tool"] = "qwent";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["argv"] = args;
    json params = json::object();
    for (const CLI::Option* opt : sub.get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name == "out" || name == "manifest") {
            continue;
        }
        if (opt->get_expected_max() == 0) {
            params[name] = opt->count() > 0;
        } else if (opt->count() > 0) {
            const auto& values = opt->results();
            params[name] = values.size() == 1 ? json(values.front()) : json(values);
        } else {
            params[name] = opt->get_default_str();
        }
    }
    m["parameters"] = params;
    m["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    m["outputs"] = outputs;
    m["csv_schema"] = r.schema;
    m["threads"] = omp_get_max_threads();
    m["wall_time_seconds"] = seconds;
    if (!r.extra.empty()) {
        m["details"] = r.extra;
    }
    return m;
}

int replay(const std::string& manifest_path, const std::string& out_override, std::ostream& out, std::ostream& err)
{
    const json manifest = io::read_json_file(manifest_path);
    std::vector<std::string> args = manifest.at("argv").get<std::vector<std::string>>();
    if (!out_override.empty()) {
        bool replaced = false;
        for (std::size_t i = 0; i + 1 < args.size(); ++i) {
            if (args[i] == "--out") {
                args[i + 1] = out_override;
                replaced = true;
            }
        }
        if (!replaced) {
            args.insert(args.end(), {"--out", out_override});
        }
    }
    return run(args, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"qwent: multipartite entanglement of quantum walks and linear optical networks", "qwent"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.set_version_flag("--version", kVersion);
    int threads = default_threads();
    app.add_option("--threads", threads, std::string("Worker threads (default: $") + kThreadsEnv + " or OpenMP default)")
        ->check(CLI::NonNegativeNumber);
    std::string out_path;
    std::string manifest_path;

    auto add_output_options = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "Output file (default: stdout)");
        sub->add_option("--manifest", manifest_path, "Manifest path (default: <out>.manifest.json)");
    };

    WalkOptions walk_opt;
    auto* walk = app.add_subcommand("walk", "Per-step E_g of a single-walker coined walk");
    walk->add_option("--positions", walk_opt.positions, "Number of sites P (circle; ignored below 2n+2 on the line)");
    walk->add_option("--steps", walk_opt.steps, "Number of steps n")->required();
    walk->add_option("--theta", walk_opt.theta, "Initial coin polar angle");
    walk->add_option("--phi", walk_opt.phi, "Initial coin phase");
    walk->add_option("--topology", walk_opt.topology)->check(CLI::IsMember({"circle", "line"}));
    walk->add_option("--partition", walk_opt.partition)->check(CLI::IsMember({"full", "coin", "position"}));
    walk->add_flag("--compare-line", walk_opt.compare_line, "Add E_g_line and delta columns");
    walk->add_option("--minima-out", walk_opt.minima_out, "CSV of local minima of the E_g series and their spacing");
    add_output_options(walk);

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep-ic", "E_g over localized initial coin states");
    sweep->add_option("--positions", sweep_opt.positions);
    sweep->add_option("--steps", sweep_opt.steps)->required();
    sweep->add_option("--topology", sweep_opt.topology)->check(CLI::IsMember({"circle", "line"}));
    sweep->add_option("--partition", sweep_opt.partition)->check(CLI::IsMember({"full", "coin", "position"}));
    sweep->add_option("--mode", sweep_opt.mode, "theta-phi grid at the final step, or theta-n at fixed phi")
        ->check(CLI::IsMember({"theta-phi", "theta-n"}));
    sweep->add_option("--grid-theta", sweep_opt.grid_theta);
    sweep->add_option("--grid-phi", sweep_opt.grid_phi);
    sweep->add_option("--theta-max", sweep_opt.theta_max, "Default pi (theta-phi) or pi/2 (theta-n)");
    sweep->add_option("--phi", sweep_opt.phi, "Fixed phase for theta-n");
    add_output_options(sweep);

    AnalyticOptions analytic_opt;
    auto* analytic = app.add_subcommand("analytic", "Closed-form coin-partition dynamics on the line");
    analytic->add_option("--n-max", analytic_opt.n_max);
    analytic->add_option("--theta", analytic_opt.theta);
    analytic->add_option("--phi", analytic_opt.phi);
    analytic->add_option("--quantity", analytic_opt.quantity)
        ->check(CLI::IsMember({"phi1", "eg", "entropy", "asymptotic", "asymptotic-grid"}));
    analytic->add_option("--grid", analytic_opt.grid, "Grid size for asymptotic-grid");
    add_output_options(analytic);

    WStateOptions wstate_opt;
    auto* wstate = app.add_subcommand("wstate", "Geometric entanglement of a single-photon (W) state");
    wstate->add_option("--uniform", wstate_opt.uniform, "Symmetric W state on M modes");
    wstate->add_option("--file", wstate_opt.file, "JSON: [a, ...], [[re, im], ...] or a state object");
    wstate->add_option("--amplitudes", wstate_opt.amplitudes, "Comma-separated real amplitudes");
    wstate->add_option("--partition", wstate_opt.partition, "Blocks like '0,1;2,3' (default: full)");
    add_output_options(wstate);

    GmeOptions gme_opt;
    auto* gme_cmd = app.add_subcommand("gme", "Genuine multipartite entanglement after random networks");
    gme_cmd->add_option("--modes", gme_opt.modes);
    gme_cmd->add_option("--photons", gme_opt.photons);
    gme_cmd->add_option("--seed", gme_opt.seed);
    gme_cmd->add_option("--samples", gme_opt.samples);
    gme_cmd->add_option("--initial", gme_opt.initial)->check(CLI::IsMember({"N0", "ones"}));
    gme_cmd->add_option("--unitary", gme_opt.unitary, "Unitary JSON file instead of random networks");
    gme_cmd->add_option("--state", gme_opt.state, "State JSON file to analyse directly");
    add_output_options(gme_cmd);

    EnsembleOptions ens_opt;
    auto* ensemble = app.add_subcommand("ensemble", "Ensemble statistics over random networks");
    ensemble->add_option("--mode", ens_opt.mode)->check(CLI::IsMember({"wstate", "gme"}));
    ensemble->add_option("--modes", ens_opt.modes, "Comma-separated mode counts")->delimiter(',');
    ensemble->add_option("--photons", ens_opt.photons);
    ensemble->add_option("--samples", ens_opt.samples);
    ensemble->add_option("--seed", ens_opt.seed);
    ensemble->add_option("--initial", ens_opt.initial)->check(CLI::IsMember({"N0", "ones"}));
    ensemble->add_option("--raw", ens_opt.raw, "Per-trial values CSV");
    ensemble->add_option("--fit-out", ens_opt.fit_out, "Power-law fit of E_g,max - mean (JSON)");
    ensemble->add_option("--fit-min-M", ens_opt.fit_min_m);
    add_output_options(ensemble);

    std::string replay_manifest;
    std::string replay_out;
    auto* replay_cmd = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    replay_cmd->add_option("manifest", replay_manifest)->required();
    replay_cmd->add_option("--out", replay_out, "Redirect the primary output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kArgumentError;
    }

    if (threads > 0) {
        omp_set_num_threads(threads);
    }

    try {
        if (replay_cmd->parsed()) {
            return replay(replay_manifest, replay_out, out, err);
        }
        const auto start = std::chrono::steady_clock::now();
        Result result;
        CLI::App* sub = nullptr;
        if (walk->parsed()) {
            sub = walk;
            result = run_walk(walk_opt);
        } else if (sweep->parsed()) {
            sub = sweep;
            result = run_sweep(sweep_opt);
        } else if (analytic->parsed()) {
            sub = analytic;
            result = run_analytic(analytic_opt);
        } else if (wstate->parsed()) {
            sub = wstate;
            result = run_wstate(wstate_opt);
        } else if (gme_cmd->parsed()) {
            sub = gme_cmd;
            result = run_gme(gme_opt);
        } else {
            sub = ensemble;
            result = run_ensemble(ens_opt);
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::vector<std::string> outputs;
        if (out_path.empty()) {
            out << result.data;
        } else {
            io::write_text_file(out_path, result.data);
            outputs.push_back(out_path);
        }
        for (const auto& [path, content] : result.side_files) {
            io::write_text_file(path, content);
            outputs.push_back(path);
        }
        if (!out_path.empty() || !manifest_path.empty()) {
            const std::string path = manifest_path.empty() ? out_path + ".manifest.json" : manifest_path;
            const json manifest = build_manifest(args, sub->get_name(), *sub, result, outputs, seconds);
            io::write_text_file(path, manifest.dump(2) + "\n");
        }
        return kOk;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return kArgumentError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace qwent::cli
