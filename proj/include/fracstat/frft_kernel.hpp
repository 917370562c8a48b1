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

#include <vector>

#include "fracstat/grid.hpp"
#include "fracstat/order.hpp"

namespace fracstat {

/// Largest Hermite degree accepted by hermite(); the normalized three-term
/// recurrence is stable well past this, but values and quadrature grids are
/// only validated up to here.
inline constexpr unsigned kMaxHermiteDegree = 200;

/// Chirp transform kernel
///   K_α(t,u) = sqrt((1 − i·cot α)/2π) · e^{i·u²/2·cot α} · e^{−i·t·u·csc α + i·t²/2·cot α}
/// with the principal branch of the square root. Throws SingularAngleError
/// when |sin α| < 1e−3 (the delta branches are not pointwise evaluable).
Complex kernel_value(const FractionalOrder& order, double t, double u);

/// Normalized Hermite function: H_n with ∫ H_n(t)² dt = 1, computed by the
/// normalized recurrence h_{n+1} = t·sqrt(2/(n+1))·h_n − sqrt(n/(n+1))·h_{n−1}.
double hermite(unsigned n, double t);

/// Values H_0(t) .. H_n(t) in one pass.
std::vector<double> hermite_all(unsigned n, double t);

/// Largest admissible grid step for the chirp quadrature: keeps the kernel's
/// local phase increment below π per sample.
///   step ≤ π / (|cot α|·T_half + |csc α|·U_max)
double chirp_step_limit(const FractionalOrder& order, double t_half, double u_max);

struct QuadratureOptions {
  /// Warn (stderr) when the input does not decay at the grid ends. Analysis
  /// of interval-supported signals (e.g. FRFS) turns this off.
  bool warn_on_nonzero_endpoints = true;
};

/// Direct O(N·M) trapezoid-rule evaluation of Z_α(u_k) = Σ_n z(t_n)·K_α(t_n,u_k)·w_n.
/// Throws SingularAngleError for singular angles and GridTooCoarseError when
/// the input grid violates the chirp-sampling validity rule.
SampledSignal frft_quadrature(const SampledSignal& signal, const FractionalOrder& order,
                              const TimeGrid& out_grid, const QuadratureOptions& opts = {});

/// Inverse transform: frft_quadrature with the order negated.
SampledSignal inverse_frft(const SampledSignal& signal, const FractionalOrder& order,
                           const TimeGrid& out_grid, const QuadratureOptions& opts = {});

/// Sample H_n on a grid.
SampledSignal hermite_signal(unsigned n, const TimeGrid& grid);

}  // namespace fracstat

#include <Eigen/Dense>

namespace fracstat {

/// Quadrature operator as a dense matrix A with A(k, n) = K_α(t_n, u_k)·w_n,
/// so that frft_quadrature(z) == A·z. Amortizes kernel evaluation across
/// ensembles: transform M realizations as Z_out = Z_in·Aᵀ.
Eigen::MatrixXcd frft_operator(const TimeGrid& in_grid, const FractionalOrder& order,
                               const TimeGrid& out_grid);

}  // namespace fracstat
