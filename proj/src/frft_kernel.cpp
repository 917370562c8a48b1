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

#include "fracstat/frft_kernel.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace fracstat {

Complex kernel_value(const FractionalOrder& order, double t, double u) {
  order.require_kernel_evaluable();
  const double alpha = order.angle();
  const double sin_a = std::sin(alpha);
  const double cot_a = std::cos(alpha) / sin_a;
  const double csc_a = 1.0 / sin_a;
  // std::sqrt(complex) is the principal branch; Re(1 - i cot) = 1 > 0 keeps
  // the argument in (-pi/2, pi/2), continuous in alpha on (0, pi).
  const Complex amp = std::sqrt(Complex(1.0, -cot_a) / (2.0 * kPi));
  const double phase = 0.5 * u * u * cot_a - t * u * csc_a + 0.5 * t * t * cot_a;
  return amp * std::polar(1.0, phase);
}

std::vector<double> hermite_all(unsigned n, double t) {
  if (n > kMaxHermiteDegree) {
    throw DegreeOutOfRangeError("hermite: degree " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxHermiteDegree));
  }
  std::vector<double> h(n + 1);
  // H_0(t) = pi^{-1/4} e^{-t^2/2}; the normalized recurrence avoids the
  // factorial overflow of the polynomial form.
  h[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * t * t);
  if (n == 0) return h;
  h[1] = std::sqrt(2.0) * t * h[0];
  for (unsigned k = 1; k < n; ++k) {
    h[k + 1] = t * std::sqrt(2.0 / (k + 1.0)) * h[k] - std::sqrt(k / (k + 1.0)) * h[k - 1];
  }
  return h;
}

double hermite(unsigned n, double t) { return hermite_all(n, t).back(); }

double chirp_step_limit(const FractionalOrder& order, double t_half, double u_max) {
  const double alpha = order.angle();
  const double sin_a = std::sin(alpha);
  const double cot_a = std::abs(std::cos(alpha) / sin_a);
  const double csc_a = std::abs(1.0 / sin_a);
  return kPi / (cot_a * t_half + csc_a * u_max);
}

SampledSignal frft_quadrature(const SampledSignal& signal, const FractionalOrder& order,
                              const TimeGrid& out_grid, const QuadratureOptions& opts) {
  order.require_kernel_evaluable();
  const TimeGrid& g = signal.grid;

  double u_max = out_grid.abs_max();
  const double limit = chirp_step_limit(order, g.abs_max(), u_max);
  if (g.step > limit) {
    throw GridTooCoarseError("frft_quadrature: step " + std::to_string(g.step) +
                             " exceeds chirp validity limit " + std::to_string(limit));
  }

  if (opts.warn_on_nonzero_endpoints && !signal.values.empty()) {
    double max_abs = 0.0;
    for (const auto& v : signal.values) max_abs = std::max(max_abs, std::abs(v));
    const double edge = std::max(std::abs(signal.values.front()), std::abs(signal.values.back()));
    if (max_abs > 0.0 && edge >= 1e-6 * max_abs) {
      std::fprintf(stderr,
                   "fracstat: warning: input does not decay at grid ends "
                   "(edge/max = %.3e); transform values include window truncation\n",
                   edge / max_abs);
    }
  }

  const double alpha = order.angle();
  const double sin_a = std::sin(alpha);
  const double cot_a = std::cos(alpha) / sin_a;
  const double csc_a = 1.0 / sin_a;
  const Complex amp = std::sqrt(Complex(1.0, -cot_a) / (2.0 * kPi));

  const std::size_t n_in = g.count;
  const std::size_t n_out = out_grid.count;

  // Separable phases: K = amp * e^{i u^2 cot/2} * e^{i t^2 cot/2} * e^{-i t u csc}.
  std::vector<Complex> chirped(n_in);
  for (std::size_t n = 0; n < n_in; ++n) {
    const double t = g.point(n);
    double w = (n == 0 || n + 1 == n_in) ? 0.5 * g.step : g.step;
    chirped[n] = signal.values[n] * std::polar(w, 0.5 * t * t * cot_a);
  }

  SampledSignal out = SampledSignal::zeros(out_grid);
  for (std::size_t k = 0; k < n_out; ++k) {
    const double u = out_grid.point(k);
    Complex acc(0.0, 0.0);
    for (std::size_t n = 0; n < n_in; ++n) {
      const double t = g.point(n);
      acc += chirped[n] * std::polar(1.0, -t * u * csc_a);
    }
    out.values[k] = amp * std::polar(1.0, 0.5 * u * u * cot_a) * acc;
  }
  return out;
}

SampledSignal inverse_frft(const SampledSignal& signal, const FractionalOrder& order,
                           const TimeGrid& out_grid, const QuadratureOptions& opts) {
  return frft_quadrature(signal, order.negated(), out_grid, opts);
}

SampledSignal hermite_signal(unsigned n, const TimeGrid& grid) {
  SampledSignal s = SampledSignal::zeros(grid);
  for (std::size_t k = 0; k < grid.count; ++k) s.values[k] = hermite(n, grid.point(k));
  return s;
}

Eigen::MatrixXcd frft_operator(const TimeGrid& in_grid, const FractionalOrder& order,
                               const TimeGrid& out_grid) {
  order.require_kernel_evaluable();
  const double limit = chirp_step_limit(order, in_grid.abs_max(), out_grid.abs_max());
  if (in_grid.step > limit) {
    throw GridTooCoarseError("frft_operator: step " + std::to_string(in_grid.step) +
                             " exceeds chirp validity limit " + std::to_string(limit));
  }
  const auto n_in = static_cast<Eigen::Index>(in_grid.count);
  const auto n_out = static_cast<Eigen::Index>(out_grid.count);
  Eigen::MatrixXcd a(n_out, n_in);
  for (Eigen::Index k = 0; k < n_out; ++k) {
    for (Eigen::Index n = 0; n < n_in; ++n) {
      const double w =
          (n == 0 || n + 1 == n_in) ? 0.5 * in_grid.step : in_grid.step;
      a(k, n) = kernel_value(order, in_grid.point(n), out_grid.point(k)) * w;
    }
  }
  return a;
}

}  // namespace fracstat
