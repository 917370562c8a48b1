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

#include "fracstat/dfrft.hpp"

#include <cmath>
#include <string>

#include "fracstat/errors.hpp"

namespace fracstat {

namespace {

void require_size(std::size_t n) {
  if (n < 2) throw SizeError("matrix size must be >= 2, got " + std::to_string(n));
}

// Dickinson–Steiglitz matrix commuting with the DFT:
// S[j][j] = 2 cos(2πj/n) − 4, S[j][j±1 mod n] = 1 (corners included).
Eigen::MatrixXd commuting_matrix(std::size_t n) {
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    S(j, j) = 2.0 * std::cos(2.0 * kPi * static_cast<double>(j) / static_cast<double>(n)) - 4.0;
    S(j, (j + 1) % n) = 1.0;
    S((j + 1) % n, j) = 1.0;
  }
  return S;
}

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-10) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace

Eigen::MatrixXcd dft_matrix(std::size_t n) {
  require_size(n);
  Eigen::MatrixXcd W(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double phase = -2.0 * kPi * static_cast<double>(j) * static_cast<double>(k) /
                           static_cast<double>(n);
      W(j, k) = std::polar(scale, phase);
    }
  }
  return W;
}

DfrftMatrix build_dfrft(std::size_t n, const FractionalOrder& order) {
  require_size(n);
  const Eigen::MatrixXd S = commuting_matrix(n);

  // Parity split: the flip v[k] -> v[(-k) mod n] commutes with both S and the
  // DFT, so the Hermite-like eigenvectors carry definite parity. Diagonalizing
  // S restricted to each parity subspace keeps the per-class spectra simple
  // and is the degeneracy-robust equivalent of sorting all eigenvectors by
  // zero-crossing count.
  const std::size_t ne = n / 2 + 1;       // even-parity dimension
  const std::size_t no = n - ne;          // odd-parity dimension
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(n, ne);
  Eigen::MatrixXd O = Eigen::MatrixXd::Zero(n, no);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::size_t ec = 0;
  E(0, ec++) = 1.0;
  for (std::size_t k = 1; k <= (n - 1) / 2; ++k) {
    E(k, ec) = inv_sqrt2;
    E(n - k, ec) = inv_sqrt2;
    ++ec;
  }
  if (n % 2 == 0) E(n / 2, ec++) = 1.0;
  std::size_t oc = 0;
  for (std::size_t k = 1; k < n - k; ++k) {
    O(k, oc) = inv_sqrt2;
    O(n - k, oc) = -inv_sqrt2;
    ++oc;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> even_solver(E.transpose() * S * E);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> odd_solver(
      no > 0 ? Eigen::MatrixXd(O.transpose() * S * O) : Eigen::MatrixXd::Zero(0, 0));
  if (even_solver.info() != Eigen::Success ||
      (no > 0 && odd_solver.info() != Eigen::Success)) {
    throw NumericalError("build_dfrft: eigendecomposition failed");
  }

  DfrftMatrix out;
  out.n = n;
  out.order = order.order();
  out.eigvecs = Eigen::MatrixXd::Zero(n, n);
  out.eigphase_indices.assign(n, 0);

  // Eigen sorts eigenvalues ascending; the smoothest (Hermite index 0) vector
  // has the largest eigenvalue of S. Interleave: even -> 0,2,4,... and
  // odd -> 1,3,5,... by descending eigenvalue. For even n this lands the last
  // even vector on Hermite index n (the Candan set skips n−1).
  std::size_t col = 0;
  for (std::size_t i = 0; i < ne; ++i, ++col) {
    const int k = static_cast<int>(2 * i);
    out.eigvecs.col(col) = E * even_solver.eigenvectors().col(ne - 1 - i);
    out.eigphase_indices[col] = k;
  }
  for (std::size_t i = 0; i < no; ++i, ++col) {
    const int k = static_cast<int>(2 * i + 1);
    out.eigvecs.col(col) = O * odd_solver.eigenvectors().col(no - 1 - i);
    out.eigphase_indices[col] = k;
  }

  // Reorder columns by Hermite index and fix signs.
  Eigen::MatrixXd Q(n, n);
  std::vector<int> idx(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t c = 0; c < n; ++c) perm[c] = c;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return out.eigphase_indices[a] < out.eigphase_indices[b];
  });
  for (std::size_t c = 0; c < n; ++c) {
    Q.col(c) = out.eigvecs.col(perm[c]);
    idx[c] = out.eigphase_indices[perm[c]];
    fix_sign(Q.col(c));
  }
  out.eigvecs = std::move(Q);
  out.eigphase_indices = std::move(idx);

  Eigen::VectorXcd phases(n);
  for (std::size_t c = 0; c < n; ++c) {
    phases(c) = std::polar(1.0, -kPi / 2.0 * order.order() * out.eigphase_indices[c]);
  }
  out.matrix = out.eigvecs.cast<Complex>() * phases.asDiagonal() *
               out.eigvecs.transpose().cast<Complex>();
  return out;
}

Eigen::VectorXcd apply(const DfrftMatrix& F, const Eigen::VectorXcd& z) {
  if (static_cast<std::size_t>(z.size()) != F.n) {
    throw DimensionMismatchError("apply: vector length " + std::to_string(z.size()) +
                                 " != matrix size " + std::to_string(F.n));
  }
  return F.matrix * z;
}

CovariancePair transform_statistics(const CovariancePair& stats, const DfrftMatrix& F) {
  const auto n = static_cast<Eigen::Index>(F.n);
  if (stats.mean.size() != n || stats.cov.rows() != n || stats.cov.cols() != n ||
      stats.pseudo.rows() != n || stats.pseudo.cols() != n) {
    throw DimensionMismatchError("transform_statistics: dimension mismatch");
  }
  CovariancePair out;
  out.mean = F.matrix * stats.mean;
  out.cov = F.matrix * stats.cov * F.matrix.adjoint();
  out.pseudo = F.matrix * stats.pseudo * F.matrix.transpose();
  // kill roundoff asymmetry so the structural invariants hold exactly
  out.cov = 0.5 * (out.cov + out.cov.adjoint()).eval();
  out.pseudo = 0.5 * (out.pseudo + out.pseudo.transpose()).eval();
  return out;
}

double gaussian_logpdf(const Eigen::VectorXcd& z, const Eigen::VectorXcd& mu,
                       const Eigen::MatrixXcd& cov) {
  const Eigen::Index n = z.size();
  if (mu.size() != n || cov.rows() != n || cov.cols() != n) {
    throw DimensionMismatchError("gaussian_logpdf: dimension mismatch");
  }
  Eigen::LLT<Eigen::MatrixXcd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefiniteError("gaussian_logpdf: covariance is not positive definite");
  }
  const Eigen::MatrixXcd L = llt.matrixL();
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = L(i, i).real();
    if (!(d > 0.0)) {
      throw NotPositiveDefiniteError("gaussian_logpdf: covariance is not positive definite");
    }
    log_det += 2.0 * std::log(d);
  }
  const Eigen::VectorXcd y = L.triangularView<Eigen::Lower>().solve(z - mu);
  return -static_cast<double>(n) * std::log(kPi) - log_det - y.squaredNorm();
}

int zero_crossings(const Eigen::VectorXd& v) {
  const double tol = 1e-8 * v.cwiseAbs().maxCoeff();
  int count = 0;
  double prev = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) <= tol) continue;
    if (prev != 0.0 && std::signbit(v(i)) != std::signbit(prev)) ++count;
    prev = v(i);
  }
  return count;
}

}  // namespace fracstat
