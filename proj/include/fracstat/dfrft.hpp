// Copyright 2026 The fracstat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fracstat/grid.hpp"
#include "fracstat/order.hpp"

namespace fracstat {

/// Unitary DFT matrix W[j][k] = e^{−i2πjk/n}/√n.
Eigen::MatrixXcd dft_matrix(std::size_t n);

/// Discrete FRFT F^a = Q Λ^a Qᵀ with real orthonormal Hermite-like DFT
/// eigenvectors Q (Dickinson–Steiglitz commuting matrix, parity-split) and
/// eigenphases e^{−i(π/2)·a·k} over the index set {0..n−2} ∪ {n−1 (odd n) | n (even n)}.
struct DfrftMatrix {
  std::size_t n = 0;
  double order = 0.0;                // transform order a
  Eigen::MatrixXcd matrix;           // F^a, n x n
  Eigen::MatrixXd eigvecs;           // Q, n x n, columns ordered by Hermite index
  std::vector<int> eigphase_indices; // Hermite index k per column
};

DfrftMatrix build_dfrft(std::size_t n, const FractionalOrder& order);

/// Matrix-vector product F^a z.
Eigen::VectorXcd apply(const DfrftMatrix& F, const Eigen::VectorXcd& z);

/// Mean / covariance / pseudo-covariance triple of a complex random vector.
struct CovariancePair {
  Eigen::VectorXcd mean;     // μ
  Eigen::MatrixXcd cov;      // C, Hermitian PSD
  Eigen::MatrixXcd pseudo;   // P, complex symmetric
};

/// (μ, C, P) ↦ (F^a μ, F^a C (F^a)ᴴ, F^a P (F^a)ᵀ). Note F^{−a} = (F^a)ᴴ.
CovariancePair transform_statistics(const CovariancePair& stats, const DfrftMatrix& F);

/// Log density of the proper complex Gaussian CN(μ, C):
///   log [ 1/(πⁿ det C) · exp(−(z−μ)ᴴ C⁻¹ (z−μ)) ]
/// via Cholesky. The caller is responsible for the vector being proper
/// (pseudo-covariance ≈ 0); this density has no meaning otherwise.
double gaussian_logpdf(const Eigen::VectorXcd& z, const Eigen::VectorXcd& mu,
                       const Eigen::MatrixXcd& cov);

/// Number of sign changes along the eigenvector (Hermite-like ordering check).
int zero_crossings(const Eigen::VectorXd& v);

}  // namespace fracstat
