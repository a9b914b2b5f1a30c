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

#include "qwent/schmidt.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qwent {

Bipartition::Bipartition(std::uint64_t left_mask, int modes) : left_mask_(left_mask), modes_(modes)
{
    if (modes < 2 || modes > 64) {
        throw std::invalid_argument("bipartition needs 2..64 modes");
    }
    const std::uint64_t all = (modes == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << modes) - 1;
    if ((left_mask & ~all) != 0 || left_mask == 0 || left_mask == all) {
        throw std::invalid_argument("bipartition sides must be non-empty subsets of the modes");
    }
}

std::vector<int> Bipartition::left_modes() const
{
    std::vector<int> out;
    for (int i = 0; i < modes_; ++i) {
        if ((left_mask_ >> i) & 1U) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<int> Bipartition::right_modes() const
{
    std::vector<int> out;
    for (int i = 0; i < modes_; ++i) {
        if (!((left_mask_ >> i) & 1U)) {
            out.push_back(i);
        }
    }
    return out;
}

namespace {

// Occupation table of the full basis, reused across bipartitions.
struct BasisTable {
    int modes;
    int photons;
    std::vector<int> occupations;  // dim x modes, row-major

    explicit BasisTable(const StateVector& state) : modes(state.modes()), photons(state.photons())
    {
        const std::uint64_t dim = state.dimension();
        occupations.resize(dim * static_cast<std::size_t>(modes));
        for (std::uint64_t k = 0; k < dim; ++k) {
            const FockBasisState s = unrank(k, modes, photons);
            std::copy(s.occupations().begin(), s.occupations().end(),
                      occupations.begin() + static_cast<std::ptrdiff_t>(k * static_cast<std::size_t>(modes)));
        }
    }
};

std::vector<SchmidtBlockResult> blocks_from_table(const StateVector& state, const BasisTable& table,
                                                  const Bipartition& bipartition)
{
    const std::vector<int> left = bipartition.left_modes();
    const std::vector<int> right = bipartition.right_modes();
    const int k = static_cast<int>(left.size());
    const int n = state.photons();

    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) {
        const auto rows = static_cast<Eigen::Index>(basis_dimension(k, t));
        const auto cols = static_cast<Eigen::Index>(basis_dimension(state.modes() - k, n - t));
        blocks.push_back(ComplexMatrix::Zero(rows, cols));
    }

    std::vector<int> left_occ(left.size());
    std::vector<int> right_occ(right.size());
    const std::size_t m = static_cast<std::size_t>(state.modes());
    for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
        const Complex a = state.amplitude(idx);
        if (a == Complex(0.0)) {
            continue;
        }
        const int* occ = table.occupations.data() + idx * m;
        int t = 0;
        for (std::size_t j = 0; j < left.size(); ++j) {
            left_occ[j] = occ[left[j]];
            t += left_occ[j];
        }
        for (std::size_t j = 0; j < right.size(); ++j) {
            right_occ[j] = occ[right[j]];
        }
        blocks[static_cast<std::size_t>(t)](static_cast<Eigen::Index>(rank(left_occ)),
                                            static_cast<Eigen::Index>(rank(right_occ))) = a;
    }

    std::vector<SchmidtBlockResult> out;
    out.reserve(blocks.size());
    for (int t = 0; t <= n; ++t) {
        const ComplexMatrix& b = blocks[static_cast<std::size_t>(t)];
        SchmidtBlockResult r{t, {}};
        if (b.size() > 0) {
            Eigen::JacobiSVD<ComplexMatrix> svd(b);
            const auto& sv = svd.singularValues();
            r.singular_values.assign(sv.data(), sv.data() + sv.size());
        }
        out.push_back(std::move(r));
    }
    return out;
}

EntanglementReport report_from_blocks(const std::vector<SchmidtBlockResult>& blocks)
{
    EntanglementReport report;
    report.branch = Branch::schmidt;
    report.g_max = 0.0;
    for (const auto& b : blocks) {
        if (!b.singular_values.empty()) {
            const double s = b.singular_values.front();
            if (s * s > report.g_max) {
                report.g_max = s * s;
                report.schmidt_block = b.t;
            }
        }
    }
    report.e_g = 1.0 - report.g_max;
    return report;
}

void check_gme_input(const StateVector& state, int max_modes)
{
    if (state.modes() > max_modes) {
        throw std::invalid_argument("gme: " + std::to_string(state.modes()) + " modes exceeds the cap of " +
                                    std::to_string(max_modes));
    }
}

GmeReport gme_single_mode(const StateVector&)
{
    // one mode has no bipartition; a single mode is trivially a product
    throw std::invalid_argument("gme requires at least two modes");
}

GmeReport argmin(const std::vector<Bipartition>& parts, const std::vector<EntanglementReport>& reports)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].e_g < reports[best].e_g) {
            best = i;
        }
    }
    return GmeReport{reports[best], parts[best]};
}

}  // namespace

std::vector<SchmidtBlockResult> schmidt_blocks(const StateVector& state, const Bipartition& bipartition)
{
    if (bipartition.modes() != state.modes()) {
        throw std::invalid_argument("bipartition and state disagree on the number of modes");
    }
    return blocks_from_table(state, BasisTable(state), bipartition);
}

EntanglementReport g_max_bipartite(const StateVector& state, const Bipartition& bipartition)
{
    return report_from_blocks(schmidt_blocks(state, bipartition));
}

std::vector<Bipartition> canonical_bipartitions(int modes)
{
    if (modes < 2 || modes > 63) {
        throw std::invalid_argument("canonical bipartitions need 2..63 modes");
    }
    const std::uint64_t rest_count = std::uint64_t{1} << (modes - 1);
    std::vector<Bipartition> out;
    out.reserve(rest_count - 1);
    for (std::uint64_t s = 0; s + 1 < rest_count; ++s) {
        out.emplace_back((s << 1) | 1U, modes);
    }
    return out;
}

GmeReport gme(const StateVector& state, int max_modes)
{
    check_gme_input(state, max_modes);
    if (state.modes() < 2) {
        return gme_single_mode(state);
    }
    const BasisTable table(state);
    const std::vector<Bipartition> parts = canonical_bipartitions(state.modes());
    std::vector<EntanglementReport> reports(parts.size());
    const auto count = static_cast<std::int64_t>(parts.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto u = static_cast<std::size_t>(i);
        reports[u] = report_from_blocks(blocks_from_table(state, table, parts[u]));
    }
    return argmin(parts, reports);
}

namespace serial {

GmeReport gme(const StateVector& state, int max_modes)
{
    check_gme_input(state, max_modes);
    if (state.modes() < 2) {
        return gme_single_mode(state);
    }
    const BasisTable table(state);
    const std::vector<Bipartition> parts = canonical_bipartitions(state.modes());
    std::vector<EntanglementReport> reports;
    reports.reserve(parts.size());
    for (const auto& p : parts) {
        reports.push_back(report_from_blocks(blocks_from_table(state, table, p)));
    }
    return argmin(parts, reports);
}

}  // namespace serial

}  // namespace qwent
