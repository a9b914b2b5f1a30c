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

#include "qwent/wstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qwent/error.hpp"
#include "root_find.hpp"

namespace qwent {

WState::WState(std::vector<double> coefficients) : coefficients_(std::move(coefficients))
{
    if (coefficients_.empty()) {
        throw std::invalid_argument("W state needs at least one coefficient");
    }
    double norm2 = 0.0;
    for (double c : coefficients_) {
        if (!(c >= 0.0)) {
            throw std::invalid_argument("W-state coefficients must be nonnegative reals");
        }
        norm2 += c * c;
    }
    if (!(std::abs(norm2 - 1.0) <= 1e-12)) {
        throw std::invalid_argument("W-state coefficients are not normalized");
    }
    std::sort(coefficients_.begin(), coefficients_.end());
}

Partition::Partition(std::vector<std::vector<int>> blocks, int modes) : blocks_(std::move(blocks)), modes_(modes)
{
    if (modes < 1) {
        throw std::invalid_argument("partition needs at least one mode");
    }
    std::vector<char> seen(static_cast<std::size_t>(modes), 0);
    int covered = 0;
    for (const auto& block : blocks_) {
        if (block.empty()) {
            throw std::invalid_argument("partition contains an empty block");
        }
        for (int i : block) {
            if (i < 0 || i >= modes) {
                throw std::invalid_argument("partition index " + std::to_string(i) + " outside 0.." +
                                            std::to_string(modes - 1));
            }
            if (seen[static_cast<std::size_t>(i)]) {
                throw std::invalid_argument("partition blocks overlap at mode " + std::to_string(i));
            }
            seen[static_cast<std::size_t>(i)] = 1;
            ++covered;
        }
    }
    if (covered != modes) {
        throw std::invalid_argument("partition does not cover all modes");
    }
}

Partition Partition::full(int modes)
{
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(modes));
    for (int i = 0; i < modes; ++i) {
        blocks[static_cast<std::size_t>(i)] = {i};
    }
    return Partition(std::move(blocks), modes);
}

Partition Partition::single_block(int modes)
{
    std::vector<int> all(static_cast<std::size_t>(modes));
    for (int i = 0; i < modes; ++i) {
        all[static_cast<std::size_t>(i)] = i;
    }
    return Partition({std::move(all)}, modes);
}

Partition Partition::coin(int positions)
{
    std::vector<int> minus;
    std::vector<int> plus;
    for (int x = 0; x < positions; ++x) {
        minus.push_back(x);
        plus.push_back(positions + x);
    }
    return Partition({std::move(minus), std::move(plus)}, 2 * positions);
}

Partition Partition::position(int positions)
{
    std::vector<std::vector<int>> blocks;
    for (int x = 0; x < positions; ++x) {
        blocks.push_back({x, positions + x});
    }
    return Partition(std::move(blocks), 2 * positions);
}

std::string_view to_string(Branch branch)
{
    switch (branch) {
    case Branch::simple:
        return "simple";
    case Branch::f1_root:
        return "F1-root";
    case Branch::f2_root:
        return "F2-root";
    case Branch::schmidt:
        return "schmidt";
    }
    return "unknown";
}

namespace {

constexpr double kVacuumCutoff = 1e-14;
constexpr double kInputNormTolerance = 1e-10;

WState from_moduli(std::vector<double> moduli)
{
    double norm2 = 0.0;
    for (double m : moduli) {
        norm2 += m * m;
    }
    if (!(norm2 > 0.0)) {
        throw std::invalid_argument("cannot build a W state from the zero vector");
    }
    if (!(std::abs(norm2 - 1.0) <= kInputNormTolerance)) {
        throw std::invalid_argument("single-photon amplitudes are not normalized (|psi|^2 = " +
                                    std::to_string(norm2) + ")");
    }
    std::erase_if(moduli, [](double m) { return m < kVacuumCutoff; });
    double kept = 0.0;
    for (double m : moduli) {
        kept += m * m;
    }
    const double scale = 1.0 / std::sqrt(kept);
    for (double& m : moduli) {
        m *= scale;
    }
    return WState(std::move(moduli));
}

// Evaluations of F1, F2 and g1, g2 in cancellation-free form. With
// s_i = sqrt(1 - lambda_i^2 xi) we use 1 - s_i = lambda_i^2 xi / (1 + s_i):
//   F1(xi) = sum_{i<=M} (1 - s_i) - 2
//   F2(xi) = sum_{i<M} (1 - s_i) - (1 - s_M)
class WSolver {
public:
    explicit WSolver(std::span<const double> lambda) : lambda_(lambda), m_(lambda.size()), lm2_(square(lambda.back())) {}

    double xi_max() const { return 1.0 / lm2_; }

    double s(std::size_t i, double xi) const { return std::sqrt(std::max(0.0, 1.0 - square(lambda_[i]) * xi)); }

    double one_minus_s(std::size_t i, double xi) const
    {
        const double l2 = square(lambda_[i]);
        return l2 * xi / (1.0 + s(i, xi));
    }

    double f0() const
    {
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < m_; ++i) {
            sum += std::sqrt(std::max(0.0, 1.0 - square(lambda_[i]) / lm2_));
        }
        return -sum + static_cast<double>(m_) - 2.0;
    }

    double f1(double xi) const
    {
        double sum = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
            sum += one_minus_s(i, xi);
        }
        return sum - 2.0;
    }

    double f2(double xi) const
    {
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < m_; ++i) {
            sum += one_minus_s(i, xi);
        }
        return sum - one_minus_s(m_ - 1, xi);
    }

    // F2(xi) / xi, continuous at 0 with value (1 - 2 lambda_M^2) / 2
    double f2_over_xi(double xi) const
    {
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < m_; ++i) {
            const double l2 = square(lambda_[i]);
            sum += l2 / (1.0 + s(i, xi));
        }
        return sum - lm2_ / (1.0 + s(m_ - 1, xi));
    }

    double df2(double xi) const
    {
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < m_; ++i) {
            const double si = s(i, xi);
            sum += square(lambda_[i]) / si;
        }
        const double sm = s(m_ - 1, xi);
        return 0.5 * (sum - lm2_ / sm);
    }

    // g1 (plus = true) or g2 (plus = false):
    //   (4 / xi) prod_{i<M} ((1 + s_i) / 2) * ((1 +- s_M) / 2)
    double g(double xi, bool plus) const
    {
        const std::size_t last = m_ - 1;
        const double last_factor = plus ? 1.0 - 0.5 * one_minus_s(last, xi) : 0.5 * one_minus_s(last, xi);
        if (m_ > 64) {
            double log_g = std::log(4.0 / xi) + std::log(last_factor);
            for (std::size_t i = 0; i < last; ++i) {
                log_g += std::log1p(-0.5 * one_minus_s(i, xi));
            }
            return std::exp(log_g);
        }
        double prod = 4.0 / xi * last_factor;
        for (std::size_t i = 0; i < last; ++i) {
            prod *= 1.0 - 0.5 * one_minus_s(i, xi);
        }
        return prod;
    }

private:
    static double square(double x) { return x * x; }

    std::span<const double> lambda_;
    std::size_t m_;
    double lm2_;
};

[[noreturn]] void root_failure(const char* which, const detail::RootResult& r, std::span<const double> lambda)
{
    std::ostringstream msg;
    msg.precision(17);
    msg << "W-state solver: root of " << which << " did not converge after " << r.iterations
        << " iterations (last xi = " << r.x << ", F = " << r.fx << ", M = " << lambda.size()
        << ", lambda_M = " << lambda.back() << ")";
    throw NumericalError(msg.str());
}

}  // namespace

WState from_amplitudes(std::span<const Complex> amplitudes)
{
    std::vector<double> moduli(amplitudes.size());
    std::transform(amplitudes.begin(), amplitudes.end(), moduli.begin(), [](const Complex& a) { return std::abs(a); });
    return from_moduli(std::move(moduli));
}

WState from_amplitudes(std::span<const double> amplitudes)
{
    std::vector<double> moduli(amplitudes.size());
    std::transform(amplitudes.begin(), amplitudes.end(), moduli.begin(), [](double a) { return std::abs(a); });
    return from_moduli(std::move(moduli));
}

EntanglementReport g_max_full(const WState& state)
{
    const std::span<const double> lambda = state.coefficients();
    const double lm2 = lambda.back() * lambda.back();
    if (lambda.size() == 1 || lm2 >= 0.5 - 1e-14) {
        return EntanglementReport{lm2, 1.0 - lm2, Branch::simple, std::nullopt, std::nullopt, std::nullopt};
    }

    const WSolver solver(lambda);
    const double xi_max = solver.xi_max();
    const double x_tol = 1e-15 * xi_max;
    constexpr double f_tol = 1e-13;
    EntanglementReport report;

    const double f0 = solver.f0();
    if (f0 >= 0.0) {
        // F1(0) = -2 and F1(xi_max) = f0
        const auto r = detail::bracketed_root([&](double xi) { return solver.f1(xi); }, 0.0, xi_max, -2.0,
                                              solver.f1(xi_max), x_tol, f_tol);
        if (!r.converged) {
            root_failure("F1", r, lambda);
        }
        report.branch = Branch::f1_root;
        report.xi0 = r.x;
        report.root_residual = std::abs(solver.f1(r.x));
        report.g_max = solver.g(r.x, true);
    } else {
        // F2 vanishes at 0, rises, and ends at f0 < 0. A stationary point
        // xi_tilde of F2 (Rolle) separates the trivial root from xi0.
        const double slope0 = 0.5 * (1.0 - 2.0 * lm2);
        const auto crit = detail::bracketed_root([&](double xi) { return solver.df2(xi); }, 0.0, xi_max, slope0,
                                                 solver.df2(xi_max), x_tol, 0.0);
        if (!crit.converged) {
            root_failure("dF2/dxi", crit, lambda);
        }
        double lo = crit.x;
        double f_lo = solver.f2(lo);
        detail::RootResult r;
        if (f_lo > 0.0) {
            r = detail::bracketed_root([&](double xi) { return solver.f2(xi); }, lo, xi_max, f_lo, solver.f2(xi_max),
                                       x_tol, f_tol);
        } else {
            // stationary point found past xi0 (F2 not unimodal): bracket the
            // nontrivial root through F2/xi, positive at 0+ and negative at xi_max
            r = detail::bracketed_root([&](double xi) { return solver.f2_over_xi(xi); }, 0.0, xi_max, slope0,
                                       solver.f2_over_xi(xi_max), x_tol, 0.0);
        }
        if (!r.converged) {
            root_failure("F2", r, lambda);
        }
        report.branch = Branch::f2_root;
        report.xi0 = r.x;
        report.root_residual = std::abs(solver.f2(r.x));
        report.g_max = solver.g(r.x, false);
    }
    report.e_g = 1.0 - report.g_max;
    return report;
}

WState coarse_grain(std::span<const Complex> amplitudes, const Partition& partition)
{
    if (static_cast<int>(amplitudes.size()) != partition.modes()) {
        throw std::invalid_argument("partition covers " + std::to_string(partition.modes()) + " modes, state has " +
                                    std::to_string(amplitudes.size()));
    }
    std::vector<double> weights;
    weights.reserve(static_cast<std::size_t>(partition.size()));
    for (const auto& block : partition.blocks()) {
        double w = 0.0;
        for (int i : block) {
            w += std::norm(amplitudes[static_cast<std::size_t>(i)]);
        }
        weights.push_back(std::sqrt(w));
    }
    return from_moduli(std::move(weights));
}

EntanglementReport e_g(std::span<const Complex> amplitudes, const Partition& partition)
{
    return g_max_full(coarse_grain(amplitudes, partition));
}

EntanglementReport e_g(const StateVector& state, const Partition& partition)
{
    if (state.photons() != 1) {
        throw std::invalid_argument("W-state entanglement requires a single-photon state");
    }
    return e_g(state.amplitudes(), partition);
}

EntanglementReport e_g_full(std::span<const Complex> amplitudes) { return g_max_full(from_amplitudes(amplitudes)); }

double e_g_max(std::int64_t modes)
{
    if (modes < 1) {
        throw std::invalid_argument("e_g_max requires M >= 1");
    }
    if (modes == 1) {
        return 0.0;
    }
    const double m = static_cast<double>(modes);
    return -std::expm1((m - 1.0) * std::log1p(-1.0 / m));
}

double e_g_max_dicke(std::int64_t modes, std::int64_t photons)
{
    if (modes < 1 || photons < 0 || photons > modes) {
        throw std::invalid_argument("e_g_max_dicke requires M >= 1 and 0 <= N <= M");
    }
    if (photons == 0 || photons == modes) {
        return 0.0;
    }
    const double m = static_cast<double>(modes);
    const double n = static_cast<double>(photons);
    const std::int64_t k = std::min(photons, modes - photons);
    double log_binom = 0.0;
    for (std::int64_t j = 1; j <= k; ++j) {
        log_binom += std::log(static_cast<double>(modes - k + j) / static_cast<double>(j));
    }
    const double log_overlap = log_binom + n * std::log(n / m) + (m - n) * std::log1p(-n / m);
    return -std::expm1(log_overlap);
}

}  // namespace qwent
