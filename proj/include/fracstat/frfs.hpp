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

#include "fracstat/estimators.hpp"
#include "fracstat/grid.hpp"
#include "fracstat/order.hpp"

namespace fracstat {

/// Fractional Fourier series setup on [−T/2, T/2]. The central frequency
/// t_o = 2π sin α / T is derived, never stored. Requires sin α > 0.
struct FrfsConfig {
  FractionalOrder order = FractionalOrder::from_order(0.5);
  double interval_width = 8.0;  // T
  int n_min = -8;
  int n_max = 8;

  double t_o() const { return 2.0 * kPi * std::sin(order.angle()) / interval_width; }
  std::size_t coeff_count() const { return static_cast<std::size_t>(n_max - n_min + 1); }
};

struct FrfsCoefficients {
  FrfsConfig config;
  std::vector<Complex> values;  // index n at values[n - n_min]

  Complex at(int n) const { return values.at(static_cast<std::size_t>(n - config.n_min)); }
};

/// Orthonormal chirp basis φ_{α,n}(t) = K_{−α}(t, n·t_o) / sqrt(T·csc α/(2π)),
/// t ∈ [−T/2, T/2].
Complex frfs_basis(const FrfsConfig& config, int n, double t);

/// C_{α,n} = sqrt(2π sin α/T) · Z_α(n·t_o) via quadrature over the interval;
/// equals the inner product against φ_{α,n} to quadrature accuracy.
FrfsCoefficients frfs_analyze(const SampledSignal& signal, const FrfsConfig& config);

/// Truncated sum z(t) = Σ_n C_{α,n} φ_{α,n}(t) over the stored index range.
SampledSignal frfs_synthesize(const FrfsCoefficients& coeffs, const TimeGrid& out_grid);

/// Discrete-time FRFT: D_α[k] = C_{π/2+α, k}.
FrfsCoefficients dtfrft(const SampledSignal& samples, const FractionalOrder& order, int n_min,
                        int n_max);

/// Coefficient second-order statistics from a correlation surface:
///   M[n][ℓ] = (2π sin α/T) · surface(n·t_o, ℓ·t_o)
/// (bilinear interpolation; same formula for auto and pseudo surfaces).
Eigen::MatrixXcd coeff_correlations(const CorrelationSurface& surface, const FrfsConfig& config);

/// Analytic white-noise case: the delta surface weight·δ(u₁−u₂) yields the
/// diagonal matrix weight·I (the δ→Kronecker conversion cancels the scale).
Eigen::MatrixXcd coeff_correlations_white(double delta_weight, const FrfsConfig& config);

}  // namespace fracstat
