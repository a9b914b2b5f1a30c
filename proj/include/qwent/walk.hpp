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

#include <functional>
#include <span>
#include <vector>

#include "qwent/fock.hpp"
#include "qwent/lon.hpp"

namespace qwent {

enum class Topology { circle, line };

struct WalkConfig {
    int positions = 1;
    Topology topology = Topology::circle;
    Coin coin = Coin::hadamard();
    int steps = 0;
};

/// Localized start cos(theta/2)|-,0> + e^{i phi} sin(theta/2)|+,0>.
struct CoinInitialState {
    double theta = 0.0;
    double phi = 0.0;
};

/// Number of sites actually simulated. On the line the circle is widened to
/// at least 2*steps + 2 sites so the two wave fronts never meet.
int effective_positions(const WalkConfig& config);

/// Throws std::invalid_argument if the coin deviates from unitarity by more than 1e-12.
void validate_coin(const Coin& coin);

std::vector<Complex> localized_state(const CoinInitialState& initial, int positions);

/// One walk step T = S (C x 1) on a 2P-mode single-photon amplitude vector
/// laid out as i = P*c + x. `in` and `out` must not alias.
void step_kernel(std::span<const Complex> in, std::span<Complex> out, int positions, const Coin& coin);

namespace serial {
void step_kernel(std::span<const Complex> in, std::span<Complex> out, int positions, const Coin& coin);
}

/// Single-walker engine: O(P) per step, one scratch buffer. Not thread-safe;
/// use one engine per thread.
class WalkEngine {
public:
    WalkEngine(const WalkConfig& config, const CoinInitialState& initial);

    void step();
    void advance(int steps);

    int time() const { return time_; }
    int positions() const { return positions_; }
    std::span<const Complex> amplitudes() const { return current_; }
    StateVector state() const;

private:
    int positions_;
    Coin coin_;
    int time_ = 0;
    std::vector<Complex> current_;
    std::vector<Complex> scratch_;
};

StateVector step(const StateVector& state, const WalkConfig& config);

/// States after 0..steps steps; entry 0 is the initial state.
std::vector<StateVector> evolve(const CoinInitialState& initial, const WalkConfig& config, int steps);

/// Streaming variant: `visit(n, amplitudes)` for n = 0..steps.
void evolve(const CoinInitialState& initial, const WalkConfig& config, int steps,
            const std::function<void(int, std::span<const Complex>)>& visit);

/// (phi0, phi1): total weight on the '-' and '+' coin blocks.
struct CoinWeights {
    double minus = 0.0;
    double plus = 0.0;
};
CoinWeights coin_partition_weights(std::span<const Complex> amplitudes, int positions);

/// Probability of finding the walker at site x (coin traced out).
std::vector<double> position_distribution(std::span<const Complex> amplitudes, int positions);

/// Indices of strict interior local minima of a time series.
std::vector<std::size_t> local_minima(std::span<const double> series);

}  // namespace qwent
