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

#include "qwent/lon.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace qwent {

double unitarity_defect(const ComplexMatrix& matrix)
{
    const auto n = matrix.rows();
    return (matrix.adjoint() * matrix - ComplexMatrix::Identity(n, n)).norm();
}

ModeUnitary::ModeUnitary(ComplexMatrix matrix, double tolerance) : matrix_(std::move(matrix))
{
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
        throw std::invalid_argument("mode unitary must be a non-empty square matrix");
    }
    const double defect = unitarity_defect(matrix_);
    if (!(defect <= tolerance)) {
        throw std::invalid_argument("matrix is not unitary (||U^dagger U - 1||_F = " + std::to_string(defect) + ")");
    }
}

ModeUnitary operator*(const ModeUnitary& a, const ModeUnitary& b)
{
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("cannot compose unitaries of different dimension");
    }
    return ModeUnitary(a.matrix_ * b.matrix_);
}

Coin Coin::hadamard()
{
    const double h = std::numbers::sqrt2 / 2.0;
    return Coin{h, h, h, -h};
}

ModeUnitary walk_unitary(int positions, const Coin& coin)
{
    if (positions < 1) {
        throw std::invalid_argument("walk needs at least one position");
    }
    const int p = positions;
    ComplexMatrix u = ComplexMatrix::Zero(2 * p, 2 * p);
    for (int x = 0; x < p; ++x) {
        const int left = (x + p - 1) % p;
        const int right = (x + 1) % p;
        // input (-, x)
        u(left, x) += coin.minus_to_minus;
        u(p + right, x) += coin.minus_to_plus;
        // input (+, x)
        u(left, p + x) += coin.plus_to_minus;
        u(p + right, p + x) += coin.plus_to_plus;
    }
    return ModeUnitary(std::move(u));
}

ModeUnitary hadamard_walk_unitary(int positions) { return walk_unitary(positions, Coin::hadamard()); }

ModeUnitary haar_random_unitary(int modes, Rng& rng)
{
    if (modes < 1) {
        throw std::invalid_argument("Haar unitary needs dimension >= 1");
    }
    std::normal_distribution<double> gauss(0.0, std::numbers::sqrt2 / 2.0);
    ComplexMatrix z(modes, modes);
    for (int j = 0; j < modes; ++j) {
        for (int i = 0; i < modes; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (int j = 0; j < modes; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0);
    }
    return ModeUnitary(std::move(q));
}

ModeUnitary haar_random_unitary(int modes, std::uint64_t seed)
{
    Rng rng = make_rng(seed);
    return haar_random_unitary(modes, rng);
}

std::vector<double> random_sphere_point(int modes, Rng& rng)
{
    if (modes < 1) {
        throw std::invalid_argument("sphere point needs dimension >= 1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(modes));
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& x : v) {
            x = gauss(rng);
            norm2 += x * x;
        }
    } while (norm2 == 0.0);
    const double norm = std::sqrt(norm2);
    for (double& x : v) {
        x /= norm;
    }
    return v;
}

std::vector<double> random_sphere_point(int modes, std::uint64_t seed)
{
    Rng rng = make_rng(seed);
    return random_sphere_point(modes, rng);
}

Complex permanent(const ComplexMatrix& matrix, int max_dimension)
{
    if (matrix.rows() != matrix.cols()) {
        throw std::invalid_argument("permanent requires a square matrix");
    }
    const int n = static_cast<int>(matrix.rows());
    if (n > max_dimension || n > 62) {
        throw std::invalid_argument("permanent dimension " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(max_dimension));
    }
    if (n == 0) {
        return 1.0;
    }
    std::vector<Complex> row_sums(static_cast<std::size_t>(n), 0.0);
    Complex total = 0.0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const int col = std::countr_zero(k);
        const std::uint64_t gray = k ^ (k >> 1);
        if ((gray >> col) & 1U) {
            for (int i = 0; i < n; ++i) {
                row_sums[static_cast<std::size_t>(i)] += matrix(i, col);
            }
        } else {
            for (int i = 0; i < n; ++i) {
                row_sums[static_cast<std::size_t>(i)] -= matrix(i, col);
            }
        }
        Complex prod = 1.0;
        for (const Complex& s : row_sums) {
            prod *= s;
        }
        if ((n - std::popcount(gray)) % 2 == 0) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    return total;
}

namespace {

struct ExpandedBasisState {
    std::vector<int> modes;  // mode i listed n_i times
    double sqrt_factorials;  // sqrt(prod n_i!)
};

ExpandedBasisState expand(const FockBasisState& s)
{
    ExpandedBasisState e{{}, 1.0};
    double fact = 1.0;
    for (int i = 0; i < s.modes(); ++i) {
        for (int c = 0; c < s[i]; ++c) {
            e.modes.push_back(i);
            fact *= static_cast<double>(c + 1);
        }
    }
    e.sqrt_factorials = std::sqrt(fact);
    return e;
}

}  // namespace

StateVector apply_lon(const ModeUnitary& unitary, const StateVector& input)
{
    const int m = input.modes();
    const int n = input.photons();
    if (unitary.dimension() != m) {
        throw std::invalid_argument("unitary dimension " + std::to_string(unitary.dimension()) +
                                    " does not match state with " + std::to_string(m) + " modes");
    }
    constexpr double kOutputTolerance = 1e-10;
    if (n == 1) {
        Eigen::Map<const Eigen::VectorXcd> in(input.amplitudes().data(), m);
        Eigen::VectorXcd out = unitary.matrix() * in;
        return StateVector(m, 1, std::vector<Complex>(out.data(), out.data() + m), kOutputTolerance);
    }
    const std::vector<FockBasisState> basis = enumerate_basis(m, n);
    std::vector<ExpandedBasisState> expanded;
    expanded.reserve(basis.size());
    for (const auto& s : basis) {
        expanded.push_back(expand(s));
    }
    std::vector<Complex> out(basis.size(), 0.0);
    ComplexMatrix sub(n, n);
    for (std::size_t in_idx = 0; in_idx < basis.size(); ++in_idx) {
        const Complex c = input.amplitude(in_idx);
        if (c == Complex(0.0)) {
            continue;
        }
        const ExpandedBasisState& in_state = expanded[in_idx];
        for (std::size_t out_idx = 0; out_idx < basis.size(); ++out_idx) {
            const ExpandedBasisState& out_state = expanded[out_idx];
            for (int r = 0; r < n; ++r) {
                for (int col = 0; col < n; ++col) {
                    sub(r, col) = unitary(out_state.modes[static_cast<std::size_t>(r)],
                                          in_state.modes[static_cast<std::size_t>(col)]);
                }
            }
            out[out_idx] += c * permanent(sub) / (in_state.sqrt_factorials * out_state.sqrt_factorials);
        }
    }
    return StateVector(m, n, std::move(out), kOutputTolerance);
}

}  // namespace qwent
