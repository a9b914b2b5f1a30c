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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qwent {

using Complex = std::complex<double>;

/// Binomial coefficient C(n, k) as an exact 64-bit integer.
/// Throws std::overflow_error when the result does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of ways to place `photons` indistinguishable photons in `modes`
/// modes, C(modes - 1 + photons, photons).
std::uint64_t basis_dimension(int modes, int photons);

/// Occupation-number basis state |n_1, ..., n_M>.
class FockBasisState {
public:
    FockBasisState() = default;
    explicit FockBasisState(std::vector<int> occupations);

    int modes() const { return static_cast<int>(occupations_.size()); }
    int photons() const { return photons_; }
    int operator[](int mode) const { return occupations_[static_cast<std::size_t>(mode)]; }
    std::span<const int> occupations() const { return occupations_; }

    friend bool operator==(const FockBasisState&, const FockBasisState&) = default;

private:
    std::vector<int> occupations_;
    int photons_ = 0;
};

// Basis order: lexicographic descending on the occupation list, so for
// M=3, N=2 the order is (2,0,0), (1,1,0), (1,0,1), (0,2,0), (0,1,1), (0,0,2).
// In particular, for N=1 the single-photon state in mode i has rank i.
std::uint64_t rank(std::span<const int> occupations);
std::uint64_t rank(const FockBasisState& state);
FockBasisState unrank(std::uint64_t index, int modes, int photons);

/// Every basis state of (modes, photons), in rank order.
std::vector<FockBasisState> enumerate_basis(int modes, int photons);

/// Normalized pure state with a fixed photon number, stored densely in rank
/// order. For N=1 the amplitude vector is the plain length-M mode vector.
class StateVector {
public:
    static constexpr double kNormTolerance = 1e-12;

    /// Validates that |sum |a|^2 - 1| <= tolerance; inputs are not rescaled.
    StateVector(int modes, int photons, std::vector<Complex> amplitudes,
                double tolerance = kNormTolerance);

    static StateVector basis(const FockBasisState& state);
    static StateVector single_photon(std::span<const Complex> amplitudes,
                                     double tolerance = kNormTolerance);

    int modes() const { return modes_; }
    int photons() const { return photons_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex amplitude(std::uint64_t index) const { return amplitudes_[index]; }
    Complex amplitude(const FockBasisState& state) const;
    double norm() const;

private:
    int modes_;
    int photons_;
    std::vector<Complex> amplitudes_;
};

/// Rescales to unit norm, keeping relative phases. Throws
/// std::invalid_argument for the zero vector.
StateVector normalize(int modes, int photons, std::span<const Complex> amplitudes);
StateVector normalize(const StateVector& state);

}  // namespace qwent
