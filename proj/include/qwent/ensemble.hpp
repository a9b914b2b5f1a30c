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

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qwent {

struct EnsembleSummary {
    int modes = 0;
    int photons = 0;
    int samples = 0;
    double mean = 0.0;
    double p16 = 0.0;
    double p84 = 0.0;
    std::vector<double> values;  // per-trial values in trial order
};

struct PowerLawFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double r_squared = 0.0;
    double fit_range_min_M = 0.0;
    int points = 0;
};

enum class InitialState {
    n0,    // |N, 0, ..., 0>
    ones,  // |1, ..., 1, 0, ..., 0>, requires M >= N
};

// Trial k draws from substream(seed, k), so results are bit-identical for
// any thread count. Trials run in parallel (OpenMP); the serial:: variants
// are the reference implementation.

/// Full-separability E_g of uniformly random W states (random sphere points).
EnsembleSummary sample_w_ensemble(int modes, int samples, std::uint64_t seed);

/// G_g of phi(U)|psi_0> for Haar-random U.
EnsembleSummary sample_gme_ensemble(int modes, int photons, int samples, std::uint64_t seed,
                                    InitialState initial = InitialState::n0);

namespace serial {
EnsembleSummary sample_w_ensemble(int modes, int samples, std::uint64_t seed);
EnsembleSummary sample_gme_ensemble(int modes, int photons, int samples, std::uint64_t seed,
                                    InitialState initial = InitialState::n0);
}  // namespace serial

/// Empirical quantile with linear interpolation between order statistics:
/// position h = (n-1) q in the sorted data (the "inclusive" convention).
double quantile(std::span<const double> values, double q);

/// (low, high) quantiles at (1 -+ fraction) / 2; 16th/84th percentiles by default.
std::pair<double, double> central_interval(std::span<const double> values, double fraction = 0.68);

/// Summary of values already in trial order.
EnsembleSummary summarize(int modes, int photons, std::vector<double> values);

/// Least squares of log(gap) against log(M) over points with M >= min_M.
/// Throws std::invalid_argument with fewer than two usable points or a
/// non-positive gap.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points, double min_M = 50.0);

}  // namespace qwent
