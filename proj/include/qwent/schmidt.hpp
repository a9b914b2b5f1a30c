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
#include <vector>

#include "qwent/fock.hpp"
#include "qwent/lon.hpp"
#include "qwent/wstate.hpp"

namespace qwent {

/// I_1 : I_2 split of modes 0..M-1, stored as the bitmask of I_1
/// (bit i set when mode i is on the left).
class Bipartition {
public:
    Bipartition(std::uint64_t left_mask, int modes);

    int modes() const { return modes_; }
    std::uint64_t left_mask() const { return left_mask_; }
    std::vector<int> left_modes() const;
    std::vector<int> right_modes() const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    std::uint64_t left_mask_;
    int modes_;
};

/// Singular values of the photon-number block with t photons on the left.
struct SchmidtBlockResult {
    int t = 0;
    std::vector<double> singular_values;  // descending
};

/// Blockwise Schmidt decomposition. Only singular values are computed;
/// Schmidt bases are not returned.
std::vector<SchmidtBlockResult> schmidt_blocks(const StateVector& state, const Bipartition& bipartition);

/// g_max = largest squared Schmidt coefficient over all photon-number blocks.
EntanglementReport g_max_bipartite(const StateVector& state, const Bipartition& bipartition);

/// The 2^(M-1) - 1 bipartitions in canonical order: mode 0 always on the
/// left, joined by the subsets of {1..M-1} in increasing bitmask order
/// (the full set excluded).
std::vector<Bipartition> canonical_bipartitions(int modes);

inline constexpr int kDefaultGmeModeCap = 16;

struct GmeReport {
    EntanglementReport report;  // e_g holds G_g
    Bipartition argmin;
};

/// Genuine multipartite entanglement G_g = min over bipartitions of E_g.
/// Ties go to the first bipartition in canonical order. Bipartitions are
/// evaluated in parallel (OpenMP). Throws std::invalid_argument above the cap.
GmeReport gme(const StateVector& state, int max_modes = kDefaultGmeModeCap);

namespace serial {
GmeReport gme(const StateVector& state, int max_modes = kDefaultGmeModeCap);
}

}  // namespace qwent
