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

#include "qwent/fock.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qwent {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // C(n-k+i, i) = C(n-k+i-1, i-1) * (n-k+i) / i, exact at every step
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                      ") exceeds 64-bit range");
        }
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t basis_dimension(int modes, int photons)
{
    if (modes < 1 || photons < 0) {
        throw std::invalid_argument("basis_dimension requires modes >= 1 and photons >= 0");
    }
    return binomial(static_cast<std::uint64_t>(modes - 1 + photons), static_cast<std::uint64_t>(photons));
}

FockBasisState::FockBasisState(std::vector<int> occupations) : occupations_(std::move(occupations))
{
    if (occupations_.empty()) {
        throw std::invalid_argument("Fock basis state needs at least one mode");
    }
    for (int n : occupations_) {
        if (n < 0) {
            throw std::invalid_argument("negative photon occupation");
        }
        photons_ += n;
    }
}

std::uint64_t rank(std::span<const int> occupations)
{
    const int modes = static_cast<int>(occupations.size());
    int remaining = std::accumulate(occupations.begin(), occupations.end(), 0);
    std::uint64_t index = 0;
    for (int i = 0; i + 1 < modes; ++i) {
        const int n = occupations[static_cast<std::size_t>(i)];
        // states sharing the prefix but holding more photons in mode i come first;
        // their count collapses by the hockey-stick identity
        const int q = remaining - n - 1;
        if (q >= 0) {
            const int tail = modes - i - 1;
            index += binomial(static_cast<std::uint64_t>(tail + q), static_cast<std::uint64_t>(q));
        }
        remaining -= n;
    }
    return index;
}

std::uint64_t rank(const FockBasisState& state) { return rank(state.occupations()); }

FockBasisState unrank(std::uint64_t index, int modes, int photons)
{
    const std::uint64_t dim = basis_dimension(modes, photons);
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for dimension " +
                                std::to_string(dim));
    }
    std::vector<int> occ(static_cast<std::size_t>(modes), 0);
    int remaining = photons;
    for (int i = 0; i + 1 < modes; ++i) {
        const int tail = modes - i - 1;
        int v = remaining;
        for (; v > 0; --v) {
            const std::uint64_t block = basis_dimension(tail, remaining - v);
            if (index < block) {
                break;
            }
            index -= block;
        }
        occ[static_cast<std::size_t>(i)] = v;
        remaining -= v;
    }
    occ.back() = remaining;
    return FockBasisState(std::move(occ));
}

std::vector<FockBasisState> enumerate_basis(int modes, int photons)
{
    const std::uint64_t dim = basis_dimension(modes, photons);
    std::vector<FockBasisState> out;
    out.reserve(dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        out.push_back(unrank(k, modes, photons));
    }
    return out;
}

namespace {

double squared_norm(std::span<const Complex> amplitudes)
{
    double sum = 0.0;
    for (const Complex& a : amplitudes) {
        sum += std::norm(a);
    }
    return sum;
}

}  // namespace

StateVector::StateVector(int modes, int photons, std::vector<Complex> amplitudes, double tolerance)
    : modes_(modes), photons_(photons), amplitudes_(std::move(amplitudes))
{
    const std::uint64_t dim = basis_dimension(modes, photons);
    if (amplitudes_.size() != dim) {
        throw std::invalid_argument("state vector has " + std::to_string(amplitudes_.size()) +
                                    " amplitudes, basis dimension is " + std::to_string(dim));
    }
    const double norm2 = squared_norm(amplitudes_);
    if (!(std::abs(norm2 - 1.0) <= tolerance)) {
        throw std::invalid_argument("state vector is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
    }
}

StateVector StateVector::basis(const FockBasisState& state)
{
    std::vector<Complex> amps(basis_dimension(state.modes(), state.photons()));
    amps[rank(state)] = 1.0;
    return StateVector(state.modes(), state.photons(), std::move(amps));
}

StateVector StateVector::single_photon(std::span<const Complex> amplitudes, double tolerance)
{
    return StateVector(static_cast<int>(amplitudes.size()), 1,
                       std::vector<Complex>(amplitudes.begin(), amplitudes.end()), tolerance);
}

Complex StateVector::amplitude(const FockBasisState& state) const
{
    if (state.modes() != modes_ || state.photons() != photons_) {
        throw std::invalid_argument("basis state does not match the state vector's (M, N)");
    }
    return amplitudes_[rank(state)];
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

StateVector normalize(int modes, int photons, std::span<const Complex> amplitudes)
{
    const double norm = std::sqrt(squared_norm(amplitudes));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("cannot normalize a zero (or non-finite) vector");
    }
    std::vector<Complex> scaled(amplitudes.begin(), amplitudes.end());
    for (Complex& a : scaled) {
        a /= norm;
    }
    return StateVector(modes, photons, std::move(scaled));
}

StateVector normalize(const StateVector& state)
{
    return normalize(state.modes(), state.photons(), state.amplitudes());
}

}  // namespace qwent
