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

#include "qwent/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qwent/fock.hpp"
#include "qwent/lon.hpp"
#include "qwent/rng.hpp"
#include "qwent/schmidt.hpp"
#include "qwent/wstate.hpp"

namespace qwent {

namespace {

void check_w_args(int modes, int samples)
{
    if (modes < 2 || samples < 2) {
        throw std::invalid_argument("W ensemble needs M >= 2 and at least 2 samples");
    }
}

void check_gme_args(int modes, int photons, int samples, InitialState initial)
{
    if (modes < 2 || photons < 1 || samples < 2) {
        throw std::invalid_argument("GME ensemble needs M >= 2, N >= 1 and at least 2 samples");
    }
    if (modes > kDefaultGmeModeCap) {
        throw std::invalid_argument("GME ensemble: M = " + std::to_string(modes) + " exceeds the cap of " +
                                    std::to_string(kDefaultGmeModeCap));
    }
    if (initial == InitialState::ones && photons > modes) {
        throw std::invalid_argument("initial state |1..10..0> requires M >= N");
    }
}

double w_trial(int modes, std::uint64_t seed, std::uint64_t trial)
{
    Rng rng = substream(seed, trial);
    const std::vector<double> point = random_sphere_point(modes, rng);
    return g_max_full(from_amplitudes(std::span<const double>(point))).e_g;
}

StateVector initial_state(int modes, int photons, InitialState initial)
{
    std::vector<int> occ(static_cast<std::size_t>(modes), 0);
    if (initial == InitialState::n0) {
        occ[0] = photons;
    } else {
        std::fill_n(occ.begin(), photons, 1);
    }
    return StateVector::basis(FockBasisState(std::move(occ)));
}

double gme_trial(int modes, const StateVector& input, std::uint64_t seed, std::uint64_t trial)
{
    Rng rng = substream(seed, trial);
    const ModeUnitary u = haar_random_unitary(modes, rng);
    return serial::gme(apply_lon(u, input)).report.e_g;
}

}  // namespace

double quantile(std::span<const double> values, double q)
{
    if (values.empty()) {
        throw std::invalid_argument("quantile of an empty sample");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument("quantile level must lie in [0, 1]");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = static_cast<double>(sorted.size() - 1) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::pair<double, double> central_interval(std::span<const double> values, double fraction)
{
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("central interval fraction must lie in (0, 1]");
    }
    return {quantile(values, 0.5 * (1.0 - fraction)), quantile(values, 0.5 * (1.0 + fraction))};
}

EnsembleSummary summarize(int modes, int photons, std::vector<double> values)
{
    EnsembleSummary s;
    s.modes = modes;
    s.photons = photons;
    s.samples = static_cast<int>(values.size());
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(values.size());
    std::tie(s.p16, s.p84) = central_interval(values);
    s.values = std::move(values);
    return s;
}

EnsembleSummary sample_w_ensemble(int modes, int samples, std::uint64_t seed)
{
    check_w_args(modes, samples);
    std::vector<double> values(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < samples; ++k) {
        values[static_cast<std::size_t>(k)] = w_trial(modes, seed, static_cast<std::uint64_t>(k));
    }
    return summarize(modes, 1, std::move(values));
}

EnsembleSummary sample_gme_ensemble(int modes, int photons, int samples, std::uint64_t seed, InitialState initial)
{
    check_gme_args(modes, photons, samples, initial);
    const StateVector input = initial_state(modes, photons, initial);
    std::vector<double> values(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < samples; ++k) {
        values[static_cast<std::size_t>(k)] = gme_trial(modes, input, seed, static_cast<std::uint64_t>(k));
    }
    return summarize(modes, photons, std::move(values));
}

namespace serial {

EnsembleSummary sample_w_ensemble(int modes, int samples, std::uint64_t seed)
{
    check_w_args(modes, samples);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        values.push_back(w_trial(modes, seed, static_cast<std::uint64_t>(k)));
    }
    return summarize(modes, 1, std::move(values));
}

EnsembleSummary sample_gme_ensemble(int modes, int photons, int samples, std::uint64_t seed, InitialState initial)
{
    check_gme_args(modes, photons, samples, initial);
    const StateVector input = initial_state(modes, photons, initial);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        values.push_back(gme_trial(modes, input, seed, static_cast<std::uint64_t>(k)));
    }
    return summarize(modes, photons, std::move(values));
}

}  // namespace serial

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points, double min_M)
{
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [m, gap] : points) {
        if (m < min_M) {
            continue;
        }
        if (!(gap > 0.0) || !(m > 0.0)) {
            throw std::invalid_argument("power-law fit needs positive M and gap values");
        }
        xs.push_back(std::log(m));
        ys.push_back(std::log(gap));
    }
    if (xs.size() < 2) {
        throw std::invalid_argument("power-law fit needs at least two points with M >= " + std::to_string(min_M));
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw std::invalid_argument("power-law fit needs at least two distinct M values");
    }
    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    const double intercept = my - fit.exponent * mx;
    fit.prefactor = std::exp(intercept);
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + fit.exponent * xs[i]);
        ss_res += r * r;
    }
    fit.r_squared = (syy > 0.0) ? 1.0 - ss_res / syy : 1.0;
    fit.fit_range_min_M = min_M;
    fit.points = static_cast<int>(xs.size());
    return fit;
}

}  // namespace qwent
