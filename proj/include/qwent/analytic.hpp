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

#include <numbers>
#include <vector>

namespace qwent {

// Closed-form coin-partition dynamics of the Hadamard walk on the line.
//
// i(n) = sum_{k=0}^{floor((n-1)/2)} (-1)^k C(2k,k) / 4^k   (i(0) = 0)
// I(n) = (i(n) - 1) / 2
//
// I(n) is the coin bias phi_1(n) - 1/2 of the walk started in |-,0>.
// Terms follow t_k = -t_{k-1} (2k-1)/(2k), so no binomials are formed.

/// Limit of I(n): (1/sqrt(2) - 1) / 2 = -(sqrt(2) - 1) / (2 sqrt(2)).
inline constexpr double kCoinBiasLimit = (std::numbers::sqrt2 / 2.0 - 1.0) / 2.0;

/// Precomputed i(0..n_max). Immutable after construction.
class SeriesCache {
public:
    explicit SeriesCache(int n_max);

    int n_max() const { return static_cast<int>(partial_sums_.size()) - 1; }
    double partial_sum(int n) const;  // i(n)
    double coin_bias(int n) const;    // I(n)

private:
    std::vector<double> partial_sums_;
};

double coin_partial_sum(int n);  // i(n), O(n)
double coin_bias(int n);         // I(n), O(n)

/// phi_1(n) = 1/2 + cos(theta) I(n) + sin(theta) cos(phi) I(n-1), n >= 1.
double phi1(int n, double theta, double phi);
double phi1(const SeriesCache& cache, int n, double theta, double phi);

/// min(phi_0, phi_1) on the line.
double e_g_coin_line(int n, double theta, double phi);
double e_g_coin_line(const SeriesCache& cache, int n, double theta, double phi);

/// lim phi_1(n) = 1/2 + kCoinBiasLimit (cos(theta) + sin(theta) cos(phi)).
double asymptotic_phi1(double theta, double phi);

/// cos(theta) + sin(theta) cos(phi); zero on the great circle that
/// maximizes the asymptotic coin entanglement.
double contour_residual(double theta, double phi);

/// Coin-position von Neumann entropy (bits) of the walk started in |-,0>.
struct CoinEntropy {
    double r1 = 1.0;  // larger reduced eigenvalue
    double r2 = 0.0;
    double entropy = 0.0;
};
CoinEntropy von_neumann_entropy(int n);
CoinEntropy von_neumann_entropy(const SeriesCache& cache, int n);

}  // namespace qwent
