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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qwent/fock.hpp"

namespace qwent {

/// Generalized W state sum_i lambda_i |1_i>: nonnegative coefficients in
/// ascending order with unit 2-norm.
class WState {
public:
    /// Sorts the coefficients; throws std::invalid_argument on negative
    /// entries or |sum lambda^2 - 1| > 1e-12.
    explicit WState(std::vector<double> coefficients);

    std::span<const double> coefficients() const { return coefficients_; }
    int size() const { return static_cast<int>(coefficients_.size()); }
    double largest() const { return coefficients_.back(); }

private:
    std::vector<double> coefficients_;
};

/// Disjoint, covering, non-empty blocks of mode indices 0..M-1.
class Partition {
public:
    Partition(std::vector<std::vector<int>> blocks, int modes);

    /// {0}:{1}:...:{M-1}
    static Partition full(int modes);
    static Partition single_block(int modes);
    /// Walk layouts over 2P modes (i = P*c + x): I_- : I_+
    static Partition coin(int positions);
    /// {(-,x),(+,x)} for each site x
    static Partition position(int positions);

    int modes() const { return modes_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    std::span<const std::vector<int>> blocks() const { return blocks_; }

private:
    std::vector<std::vector<int>> blocks_;
    int modes_;
};

enum class Branch { simple, f1_root, f2_root, schmidt };
std::string_view to_string(Branch branch);

struct EntanglementReport {
    double g_max = 1.0;
    double e_g = 0.0;  // always 1 - g_max
    Branch branch = Branch::simple;
    std::optional<double> xi0;             // root of F1/F2 for the W-state solver
    std::optional<double> root_residual;   // |F(xi0)|
    std::optional<int> schmidt_block;      // photon number t on the left for Schmidt reports
};

/// Local phases removed, moduli sorted ascending, entries below 1e-14
/// dropped (vacuum modes carry no entanglement). The input norm must be 1
/// within 1e-10; the result is rescaled to exact unit norm.
WState from_amplitudes(std::span<const Complex> amplitudes);
WState from_amplitudes(std::span<const double> amplitudes);

/// Largest separability eigenvalue of a W state under full separability,
/// via the root of F1 or F2. Throws NumericalError if the root finder does
/// not converge.
EntanglementReport g_max_full(const WState& state);

/// Single-photon state seen through a partition: block k gets coefficient
/// sqrt(sum_{i in I_k} |alpha_i|^2); empty-weight blocks are dropped.
WState coarse_grain(std::span<const Complex> amplitudes, const Partition& partition);

EntanglementReport e_g(std::span<const Complex> amplitudes, const Partition& partition);
EntanglementReport e_g(const StateVector& state, const Partition& partition);

/// Full separability fast path: g_max_full(from_amplitudes(amplitudes)).
EntanglementReport e_g_full(std::span<const Complex> amplitudes);

/// 1 - (1 - 1/M)^(M-1): the symmetric W state, maximal over all M-mode W states.
double e_g_max(std::int64_t modes);

/// 1 - C(M,N) (N/M)^N ((M-N)/M)^(M-N): symmetric Dicke state.
double e_g_max_dicke(std::int64_t modes, std::int64_t photons);

}  // namespace qwent
