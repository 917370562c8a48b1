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
#include <string>

#include "fracstat/grid.hpp"

namespace fracstat {

enum class SurfaceKind { Auto, Pseudo };
enum class SurfaceSource { MonteCarlo, Theory };

/// Two-index correlation estimate/prediction R(u_j, u_k) with per-entry
/// standard errors. Auto surfaces are Hermitian and Pseudo surfaces symmetric
/// by construction.
struct CorrelationSurface {
  TimeGrid u_grid;
  Eigen::MatrixXcd values;
  Eigen::MatrixXd std_err;
  SurfaceKind kind = SurfaceKind::Auto;
  SurfaceSource source = SurfaceSource::MonteCarlo;

  /// Bilinear interpolation on the surface grid; DomainError outside.
  Complex value_at(double u1, double u2) const;
};

struct MeanEstimate {
  TimeGrid u_grid;
  Eigen::VectorXcd mean;
  Eigen::VectorXd std_err;
};

/// Per-index sample mean across realizations (rows of `realizations`);
/// std_err = sqrt(Σ_m |z_m − mean|² / (M(M−1))).
MeanEstimate estimate_mean(const Eigen::MatrixXcd& realizations, const TimeGrid& u_grid);

/// values[j][k] = (1/M) Σ_m Z_m[j]·conj(Z_m[k]); std_err from the per-entry
/// sample standard deviation of the products over m.
CorrelationSurface estimate_autocorr(const Eigen::MatrixXcd& realizations, const TimeGrid& u_grid);

/// Same with Z_m[j]·Z_m[k] (no conjugate).
CorrelationSurface estimate_pseudo_autocorr(const Eigen::MatrixXcd& realizations,
                                            const TimeGrid& u_grid);

enum class Verdict { Stationary, NonstationaryMean, NonstationaryACF, ImproperOutput };

std::string to_string(Verdict v);

/// Sigma-threshold stationarity tests. The quantitative test is an artifact
/// decision (the source analysis states no numeric criterion); every field
/// carries both the raw deviation and its size in standard errors.
struct StationarityReport {
  bool mean_constant = false;
  double mean_max_dev = 0.0;        // max |mean(u) − avg|
  double mean_max_sigma = 0.0;      // same, in stderr units
  bool acf_toeplitz = false;
  double acf_max_dev = 0.0;         // max within-diagonal |v − diag mean|
  double acf_max_sigma = 0.0;
  bool acf_amplitude_toeplitz = false;  // reported, never merged into verdict
  double acf_amp_max_dev = 0.0;
  double acf_amp_max_sigma = 0.0;
  bool pseudo_vanishes = false;
  double pseudo_max_mag = 0.0;
  double pseudo_max_sigma = 0.0;
  bool input_is_complex = true;
  double tol_sigma = 4.0;
  Verdict verdict = Verdict::Stationary;
};

/// pacf may be null when no pseudo estimate exists (then treated as vanished).
StationarityReport stationarity_verdict(const MeanEstimate& mean, const CorrelationSurface& acf,
                                        const CorrelationSurface* pacf, bool input_is_complex,
                                        double tol_sigma = 4.0);

}  // namespace fracstat
