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

#include "fracstat/frfs.hpp"

#include <cmath>
#include <string>

#include "fracstat/errors.hpp"
#include "fracstat/frft_kernel.hpp"

namespace fracstat {

namespace {

void require_frfs_order(const FrfsConfig& config) {
  config.order.require_kernel_evaluable();
  if (std::sin(config.order.angle()) <= 0.0) {
    throw ValidationError("frfs: requires sin(alpha) > 0 (positive central frequency)");
  }
  if (config.interval_width <= 0.0) throw ValidationError("frfs: interval width must be > 0");
  if (config.n_min > config.n_max) throw ValidationError("frfs: n_min > n_max");
}

constexpr double kEdgeTol = 1e-9;

}  // namespace

Complex frfs_basis(const FrfsConfig& config, int n, double t) {
  require_frfs_order(config);
  const double half = config.interval_width / 2.0;
  if (t < -half - kEdgeTol || t > half + kEdgeTol) {
    throw OutOfIntervalError("frfs_basis: t outside [-T/2, T/2]");
  }
  const double alpha = config.order.angle();
  const double csc_a = 1.0 / std::sin(alpha);
  const double norm = std::sqrt(config.interval_width * csc_a / (2.0 * kPi));
  return kernel_value(config.order.negated(), t, n * config.t_o()) / norm;
}

FrfsCoefficients frfs_analyze(const SampledSignal& signal, const FrfsConfig& config) {
  require_frfs_order(config);
  const double half = config.interval_width / 2.0;
  if (std::abs(signal.grid.start + half) > 1e-6 || std::abs(signal.grid.back() - half) > 1e-6) {
    throw ValidationError("frfs_analyze: signal grid must span [-T/2, T/2]");
  }
  const double t_o = config.t_o();
  TimeGrid out(config.n_min * t_o, t_o,
               static_cast<std::size_t>(config.n_max - config.n_min) + 1);
  QuadratureOptions opts;
  opts.warn_on_nonzero_endpoints = false;  // interval-supported signals are the norm here
  const SampledSignal z_alpha = frft_quadrature(signal, config.order, out, opts);
  FrfsCoefficients c;
  c.config = config;
  c.values.resize(config.coeff_count());
  const double scale = std::sqrt(2.0 * kPi * std::sin(config.order.angle()) /
                                 config.interval_width);
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = scale * z_alpha.values[i];
  return c;
}

SampledSignal frfs_synthesize(const FrfsCoefficients& coeffs, const TimeGrid& out_grid) {
  require_frfs_order(coeffs.config);
  const double half = coeffs.config.interval_width / 2.0;
  if (out_grid.start < -half - kEdgeTol || out_grid.back() > half + kEdgeTol) {
    throw OutOfIntervalError("frfs_synthesize: out grid outside [-T/2, T/2]");
  }
  SampledSignal out = SampledSignal::zeros(out_grid);
  for (std::size_t k = 0; k < out_grid.count; ++k) {
    const double t = out_grid.point(k);
    Complex acc(0, 0);
    for (int n = coeffs.config.n_min; n <= coeffs.config.n_max; ++n) {
      acc += coeffs.at(n) * frfs_basis(coeffs.config, n, t);
    }
    out.values[k] = acc;
  }
  return out;
}

FrfsCoefficients dtfrft(const SampledSignal& samples, const FractionalOrder& order, int n_min,
                        int n_max) {
  const FractionalOrder shifted = FractionalOrder::from_angle(kPi / 2.0 + order.angle());
  if (!shifted.kernel_evaluable()) {
    throw SingularAngleError("dtfrft: pi/2 + alpha is a singular angle");
  }
  FrfsConfig config;
  config.order = shifted;
  config.interval_width = samples.grid.back() - samples.grid.start;
  config.n_min = n_min;
  config.n_max = n_max;
  // the analysis interval is wherever the samples live; recenter if needed
  if (std::abs(samples.grid.start + samples.grid.back()) > 1e-9) {
    throw ValidationError("dtfrft: sample grid must be symmetric about 0 ([-T/2, T/2])");
  }
  return frfs_analyze(samples, config);
}

Eigen::MatrixXcd coeff_correlations(const CorrelationSurface& surface, const FrfsConfig& config) {
  require_frfs_order(config);
  const double t_o = config.t_o();
  const double scale = 2.0 * kPi * std::sin(config.order.angle()) / config.interval_width;
  const auto count = static_cast<Eigen::Index>(config.coeff_count());
  Eigen::MatrixXcd m(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    for (Eigen::Index j = 0; j < count; ++j) {
      const double u1 = (config.n_min + static_cast<int>(i)) * t_o;
      const double u2 = (config.n_min + static_cast<int>(j)) * t_o;
      m(i, j) = scale * surface.value_at(u1, u2);
    }
  }
  return m;
}

Eigen::MatrixXcd coeff_correlations_white(double delta_weight, const FrfsConfig& config) {
  require_frfs_order(config);
  const auto count = static_cast<Eigen::Index>(config.coeff_count());
  // (2π sin α/T) · weight·δ(u₁−u₂) sampled at spacing t_o turns δ into
  // Kronecker/t_o; the scales cancel exactly since t_o = 2π sin α / T.
  return delta_weight * Eigen::MatrixXcd::Identity(count, count);
}

}  // namespace fracstat
