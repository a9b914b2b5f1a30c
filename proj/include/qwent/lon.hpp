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

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "qwent/fock.hpp"
#include "qwent/rng.hpp"

namespace qwent {

using ComplexMatrix = Eigen::MatrixXcd;

/// M x M unitary acting on mode creation operators. Column j is the image of
/// input mode j, so on single-photon states the network acts as U * amplitudes.
class ModeUnitary {
public:
    static constexpr double kUnitarityTolerance = 1e-10;

    /// Throws std::invalid_argument if the matrix is not square or
    /// ||U^dagger U - 1||_F exceeds `tolerance`.
    explicit ModeUnitary(ComplexMatrix matrix, double tolerance = kUnitarityTolerance);

    int dimension() const { return static_cast<int>(matrix_.rows()); }
    const ComplexMatrix& matrix() const { return matrix_; }
    Complex operator()(int row, int col) const { return matrix_(row, col); }

    /// Network composition: (a * b) applies b first.
    friend ModeUnitary operator*(const ModeUnitary& a, const ModeUnitary& b);

private:
    ComplexMatrix matrix_;
};

double unitarity_defect(const ComplexMatrix& matrix);

/// 2x2 coin acting on (-, +).
struct Coin {
    Complex minus_to_minus;  // <-|C|->
    Complex plus_to_minus;   // <-|C|+>
    Complex minus_to_plus;   // <+|C|->
    Complex plus_to_plus;    // <+|C|+>

    static Coin hadamard();
};

/// Coined walk on a circle of `positions` sites as a 2P x 2P mode unitary,
/// mode index i = P*c + x with c = 0 for '-' and c = 1 for '+'. The '-'
/// component moves x -> x-1 and the '+' component x -> x+1 (periodic).
ModeUnitary walk_unitary(int positions, const Coin& coin);

/// (1/sqrt 2) [[S, S], [S^T, -S^T]] with S the periodic shift S e_j = e_{j-1}.
ModeUnitary hadamard_walk_unitary(int positions);

/// Haar-distributed U(M): complex Ginibre matrix, QR, diagonal phase fix.
ModeUnitary haar_random_unitary(int modes, Rng& rng);
ModeUnitary haar_random_unitary(int modes, std::uint64_t seed);

/// Uniform point on S^{M-1} (normalized standard Gaussian vector).
std::vector<double> random_sphere_point(int modes, Rng& rng);
std::vector<double> random_sphere_point(int modes, std::uint64_t seed);

inline constexpr int kDefaultPermanentCap = 20;

/// Exact permanent by Ryser's formula with Gray-code column updates,
/// O(2^n n). The 0x0 permanent is 1. Throws std::invalid_argument for
/// non-square input or n > max_dimension.
Complex permanent(const ComplexMatrix& matrix, int max_dimension = kDefaultPermanentCap);

/// State-space representation phi(U)|psi>. Output amplitude on |m> is
/// sum_n psi_n per(U[m, n]) / sqrt(prod n_i! prod m_j!), where U[m, n]
/// repeats row i m_i times and column j n_j times. N=1 is a plain
/// matrix-vector product.
StateVector apply_lon(const ModeUnitary& unitary, const StateVector& input);

}  // namespace qwent
