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

#include "qwent/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwent {

SeriesCache::SeriesCache(int n_max)
{
    if (n_max < 0) {
        throw std::invalid_argument("series cache needs n_max >= 0");
    }
    partial_sums_.resize(static_cast<std::size_t>(n_max) + 1);
    partial_sums_[0] = 0.0;
    double term = 1.0;
    double sum = 0.0;
    int k = 0;
    for (int n = 1; n <= n_max; ++n) {
        // upper summation limit floor((n-1)/2) grows by one at every odd n
        if (n % 2 == 1) {
            if (k > 0) {
                term *= -(2.0 * k - 1.0) / (2.0 * k);
            }
            sum += term;
            ++k;
        }
        partial_sums_[static_cast<std::size_t>(n)] = sum;
    }
}

double SeriesCache::partial_sum(int n) const
{
    if (n < 0 || n > n_max()) {
        throw std::out_of_range("series index " + std::to_string(n) + " outside cache 0.." + std::to_string(n_max()));
    }
    return partial_sums_[static_cast<std::size_t>(n)];
}

double SeriesCache::coin_bias(int n) const { return 0.5 * (partial_sum(n) - 1.0); }

double coin_partial_sum(int n) { return SeriesCache(std::max(n, 0)).partial_sum(n); }

double coin_bias(int n) { return SeriesCache(std::max(n, 0)).coin_bias(n); }

double phi1(const SeriesCache& cache, int n, double theta, double phi)
{
    if (n < 1) {
        throw std::invalid_argument("phi1 is defined for n >= 1");
    }
    return 0.5 + std::cos(theta) * cache.coin_bias(n) + std::sin(theta) * std::cos(phi) * cache.coin_bias(n - 1);
}

double phi1(int n, double theta, double phi) { return phi1(SeriesCache(std::max(n, 0)), n, theta, phi); }

double e_g_coin_line(const SeriesCache& cache, int n, double theta, double phi)
{
    const double p1 = phi1(cache, n, theta, phi);
    return std::min(p1, 1.0 - p1);
}

double e_g_coin_line(int n, double theta, double phi) { return e_g_coin_line(SeriesCache(std::max(n, 0)), n, theta, phi); }

double asymptotic_phi1(double theta, double phi) { return 0.5 + kCoinBiasLimit * contour_residual(theta, phi); }

double contour_residual(double theta, double phi) { return std::cos(theta) + std::sin(theta) * std::cos(phi); }

CoinEntropy von_neumann_entropy(const SeriesCache& cache, int n)
{
    if (n < 1) {
        throw std::invalid_argument("von_neumann_entropy is defined for n >= 1");
    }
    const double a = cache.partial_sum(n);
    const double b = cache.partial_sum(n + 1);
    const double radicand = std::max(0.0, 2.0 - b * (2.0 - b) - a * (2.0 - a));
    const double root = std::sqrt(radicand);
    CoinEntropy out;
    out.r1 = 0.5 * (1.0 + root);
    out.r2 = 0.5 * (1.0 - root);
    for (double r : {out.r1, out.r2}) {
        if (r > 0.0) {
            out.entropy -= r * std::log2(r);
        }
    }
    return out;
}

CoinEntropy von_neumann_entropy(int n) { return von_neumann_entropy(SeriesCache(std::max(n, 0) + 1), n); }

}  // namespace qwent
