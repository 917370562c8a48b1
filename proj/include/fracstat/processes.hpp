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
#include <cstdint>
#include <functional>

#include "fracstat/grid.hpp"

namespace fracstat {

enum class ModelKind {
  WhiteReal,
  WhiteProperComplex,
  WhiteImproperComplex,
  ColoredGaussian,
};

/// WSS process description. White kinds use the continuous convention
/// R(τ) = (N_o/2)·δ(τ), realized on a grid as per-sample variance
/// (N_o/2)/Δt so that quadrature sums approximate the continuous integral
/// identities. ColoredGaussian carries a closed-form autocorrelation R(τ)
/// (and optionally a pseudo-autocorrelation R̂(τ); R̂ ≡ R with real R gives
/// a real-valued process, R̂ absent gives a proper complex one).
struct StationaryModel {
  ModelKind kind = ModelKind::WhiteProperComplex;
  Complex mean{0.0, 0.0};
  double noise_level = 2.0;  // N_o
  std::function<Complex(double)> acf;         // ColoredGaussian only
  std::function<Complex(double)> pseudo_acf;  // optional
  Complex rho{0.0, 0.0};                      // WhiteImproperComplex, |rho| <= 1

  bool is_complex() const { return kind != ModelKind::WhiteReal; }
};

/// M realizations × N samples, reproducible bit-for-bit from the seed.
struct Ensemble {
  TimeGrid grid;
  Eigen::MatrixXcd realizations;  // M x N
  StationaryModel model;
  std::uint64_t seed = 0;

  std::size_t realization_count() const { return static_cast<std::size_t>(realizations.rows()); }
};

/// Seeded ensemble generation.
///
/// RNG contract (fixed so reimplementations can reproduce or document
/// divergence): realization m draws from a std::mt19937_64 seeded with
/// splitmix64(seed XOR (0x9E3779B97F4A7C15 * (m+1))); standard normals come
/// from Box–Muller on u = (x >> 11)·2^{−53}:
///   r = sqrt(−2·ln(1−u₁)),  g₁ = r·cos(2πu₂),  g₂ = r·sin(2πu₂),
/// consumed strictly in sample order. Realizations are independent
/// substreams, so generation parallelizes without changing the output.
Ensemble generate(const StationaryModel& model, const TimeGrid& grid, std::size_t m_count,
                  std::uint64_t seed);

/// Closed-form model autocorrelation. White kinds return the delta WEIGHT
/// N_o/2 at τ = 0 (distributional convention) and 0 elsewhere.
Complex model_acf(const StationaryModel& model, double tau);

/// Closed-form pseudo-autocorrelation under the same convention.
Complex model_pacf(const StationaryModel& model, double tau);

/// splitmix64 step, exposed for tests documenting the substream scheme.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace fracstat
