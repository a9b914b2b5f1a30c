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

#include "qwent/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwent {

namespace {

constexpr int kParallelThreshold = 2048;

}  // namespace

int effective_positions(const WalkConfig& config)
{
    if (config.steps < 0) {
        throw std::invalid_argument("walk steps must be non-negative");
    }
    if (config.topology == Topology::line) {
        return std::max(config.positions, 2 * config.steps + 2);
    }
    if (config.positions < 1) {
        throw std::invalid_argument("walk on a circle needs at least one position");
    }
    return config.positions;
}

void validate_coin(const Coin& coin)
{
    ComplexMatrix c(2, 2);
    c << coin.minus_to_minus, coin.plus_to_minus, coin.minus_to_plus, coin.plus_to_plus;
    if (!(unitarity_defect(c) <= 1e-12)) {
        throw std::invalid_argument("walk coin is not unitary");
    }
}

std::vector<Complex> localized_state(const CoinInitialState& initial, int positions)
{
    std::vector<Complex> amps(2 * static_cast<std::size_t>(positions), 0.0);
    amps[0] = std::cos(initial.theta / 2.0);
    amps[static_cast<std::size_t>(positions)] = std::polar(std::sin(initial.theta / 2.0), initial.phi);
    return amps;
}

void step_kernel(std::span<const Complex> in, std::span<Complex> out, int positions, const Coin& coin)
{
    const int p = positions;
    const Complex* minus = in.data();
    const Complex* plus = in.data() + p;
    Complex* out_minus = out.data();
    Complex* out_plus = out.data() + p;
#pragma omp parallel for schedule(static) if (p >= kParallelThreshold)
    for (int x = 0; x < p; ++x) {
        const int from_right = (x + 1 == p) ? 0 : x + 1;
        const int from_left = (x == 0) ? p - 1 : x - 1;
        out_minus[x] = coin.minus_to_minus * minus[from_right] + coin.plus_to_minus * plus[from_right];
        out_plus[x] = coin.minus_to_plus * minus[from_left] + coin.plus_to_plus * plus[from_left];
    }
}

namespace serial {

void step_kernel(std::span<const Complex> in, std::span<Complex> out, int positions, const Coin& coin)
{
    const std::size_t p = static_cast<std::size_t>(positions);
    for (std::size_t x = 0; x < p; ++x) {
        const std::size_t from_right = (x + 1) % p;
        const std::size_t from_left = (x + p - 1) % p;
        out[x] = coin.minus_to_minus * in[from_right] + coin.plus_to_minus * in[p + from_right];
        out[p + x] = coin.minus_to_plus * in[from_left] + coin.plus_to_plus * in[p + from_left];
    }
}

}  // namespace serial

WalkEngine::WalkEngine(const WalkConfig& config, const CoinInitialState& initial)
    : positions_(effective_positions(config)),
      coin_(config.coin),
      current_(localized_state(initial, positions_)),
      scratch_(current_.size())
{
    validate_coin(coin_);
}

void WalkEngine::step()
{
    step_kernel(current_, scratch_, positions_, coin_);
    current_.swap(scratch_);
    ++time_;
}

void WalkEngine::advance(int steps)
{
    for (int i = 0; i < steps; ++i) {
        step();
    }
}

StateVector WalkEngine::state() const { return StateVector::single_photon(current_, 1e-10); }

StateVector step(const StateVector& state, const WalkConfig& config)
{
    if (state.photons() != 1 || state.modes() % 2 != 0) {
        throw std::invalid_argument("walk step expects a single-photon state over 2P modes");
    }
    validate_coin(config.coin);
    const int p = state.modes() / 2;
    std::vector<Complex> out(state.dimension());
    step_kernel(state.amplitudes(), out, p, config.coin);
    return StateVector(state.modes(), 1, std::move(out), 1e-10);
}

void evolve(const CoinInitialState& initial, const WalkConfig& config, int steps,
            const std::function<void(int, std::span<const Complex>)>& visit)
{
    if (steps < 0) {
        throw std::invalid_argument("number of steps must be non-negative");
    }
    WalkConfig cfg = config;
    cfg.steps = std::max(cfg.steps, steps);
    WalkEngine engine(cfg, initial);
    visit(0, engine.amplitudes());
    for (int n = 1; n <= steps; ++n) {
        engine.step();
        visit(n, engine.amplitudes());
    }
}

std::vector<StateVector> evolve(const CoinInitialState& initial, const WalkConfig& config, int steps)
{
    std::vector<StateVector> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    evolve(initial, config, steps, [&](int, std::span<const Complex> amps) {
        out.push_back(StateVector::single_photon(amps, 1e-10));
    });
    return out;
}

CoinWeights coin_partition_weights(std::span<const Complex> amplitudes, int positions)
{
    const std::size_t p = static_cast<std::size_t>(positions);
    if (amplitudes.size() != 2 * p) {
        throw std::invalid_argument("amplitude vector does not have the coin-block layout 2P");
    }
    CoinWeights w;
    for (std::size_t x = 0; x < p; ++x) {
        w.minus += std::norm(amplitudes[x]);
        w.plus += std::norm(amplitudes[p + x]);
    }
    return w;
}

std::vector<double> position_distribution(std::span<const Complex> amplitudes, int positions)
{
    const std::size_t p = static_cast<std::size_t>(positions);
    if (amplitudes.size() != 2 * p) {
        throw std::invalid_argument("amplitude vector does not have the coin-block layout 2P");
    }
    std::vector<double> prob(p);
    for (std::size_t x = 0; x < p; ++x) {
        prob[x] = std::norm(amplitudes[x]) + std::norm(amplitudes[p + x]);
    }
    return prob;
}

std::vector<std::size_t> local_minima(std::span<const double> series)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < series.size(); ++i) {
        if (series[i] < series[i - 1] && series[i] < series[i + 1]) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace qwent
