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

#include "fracstat/theory.hpp"

#include <cmath>
#include <string>

#include "fracstat/errors.hpp"
#include "fracstat/frft_kernel.hpp"

namespace fracstat {

namespace {

void require_cos(const FractionalOrder& order, const char* who) {
  if (std::abs(std::cos(order.angle())) < kSingularSinTol) {
    throw SingularAngleError(std::string(who) + ": cos(alpha) ~ 0, tan/sec undefined");
  }
}

// Trapezoid weights on the symmetric grid [-L, L] with the given step.
struct Axis {
  std::vector<double> t;
  double h;
};

Axis make_axis(const FractionalOrder& order, double half_width, double step, double u_abs) {
  const double limit = chirp_step_limit(order, half_width, u_abs);
  double h = (step > 0.0) ? step : 0.5 * limit;
  if (h > limit) {
    throw GridTooCoarseError("oracle: step " + std::to_string(h) + " exceeds validity limit " +
                             std::to_string(limit));
  }
  const auto n = static_cast<std::size_t>(std::llround(2.0 * half_width / h)) + 1;
  Axis a;
  a.h = 2.0 * half_width / static_cast<double>(n - 1);
  a.t.resize(n);
  for (std::size_t i = 0; i < n; ++i) a.t[i] = -half_width + static_cast<double>(i) * a.h;
  return a;
}

// Sum_{j,k} R(t_j - t_k) a_j b_k with a uniform axis: R values precomputed
// over the difference set.
Complex double_quadrature(const AcfFn& R, const FractionalOrder& order, double u1, double u2,
                          double half_width, double step, bool conjugate_second) {
  order.require_kernel_evaluable();
  const Axis ax = make_axis(order, half_width, step, std::max(std::abs(u1), std::abs(u2)));
  const std::size_t n = ax.t.size();

  std::vector<Complex> a(n), b(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = (j == 0 || j + 1 == n) ? 0.5 * ax.h : ax.h;
    a[j] = kernel_value(order, ax.t[j], u1) * w;
    const Complex kb = kernel_value(order, ax.t[j], u2);
    b[j] = (conjugate_second ? std::conj(kb) : kb) * w;
  }
  std::vector<Complex> r(2 * n - 1);
  for (std::size_t d = 0; d < 2 * n - 1; ++d) {
    r[d] = R((static_cast<double>(d) - static_cast<double>(n - 1)) * ax.h);
  }
  Complex total(0, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Complex inner(0, 0);
    const Complex* rrow = r.data() + (n - 1 - k);
    for (std::size_t j = 0; j < n; ++j) inner += rrow[j] * a[j];  // rrow[j] = R(t_j - t_k)
    total += inner * b[k];
  }
  return total;
}

}  // namespace

Complex predicted_mean(Complex mu, const FractionalOrder& order, double u) {
  order.require_kernel_evaluable();
  require_cos(order, "predicted_mean");
  const double tan_a = std::tan(order.angle());
  const Complex amp = std::sqrt(Complex(1.0, tan_a));
  return mu * amp * std::polar(1.0, -0.5 * u * u * tan_a);
}

Complex predicted_autocorr(const AcfFn& R, const FractionalOrder& order, double u1, double u2) {
  order.require_kernel_evaluable();
  require_cos(order, "predicted_autocorr");
  const double alpha = order.angle();
  const double sec_a = 1.0 / std::cos(alpha);
  const double tan_a = std::tan(alpha);
  return sec_a * R(sec_a * (u1 - u2)) * std::polar(1.0, 0.5 * (u2 * u2 - u1 * u1) * tan_a);
}

Complex numeric_output_autocorr(const AcfFn& R, const FractionalOrder& order, double u1, double u2,
                                double domain_half_width, double step) {
  return double_quadrature(R, order, u1, u2, domain_half_width, step, true);
}

Complex numeric_output_pseudo_autocorr(const AcfFn& pseudo_acf, const FractionalOrder& order,
                                       double u1, double u2, double domain_half_width,
                                       double step) {
  return double_quadrature(pseudo_acf, order, u1, u2, domain_half_width, step, false);
}

namespace {

PseudoChainParams chain_params_impl(const FractionalOrder& order) {
  const double alpha = order.angle();
  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  PseudoChainParams p;
  p.c = sin_a * cos_a + cos_a / sin_a;
  p.beta = std::atan(p.c * p.c * std::tan(alpha));
  return p;
}

}  // namespace

PseudoChainParams pseudo_chain_params(const FractionalOrder& order) {
  order.require_kernel_evaluable();
  require_cos(order, "pseudo_chain_params");
  return chain_params_impl(order);
}

double pseudo_chain_gamma(const FractionalOrder& order, double u1, double u2) {
  order.require_kernel_evaluable();
  require_cos(order, "pseudo_chain_gamma");
  const double alpha = order.angle();
  const double sin_a = std::sin(alpha);
  const double csc_a = 1.0 / sin_a;
  const double cot_a = std::cos(alpha) / sin_a;
  const PseudoChainParams p = chain_params_impl(order);
  // c/cot = 1 + sin^2(alpha) > 0 always
  const double scale = std::sqrt(p.c / cot_a);
  return (u1 * sin_a - u2 * csc_a) * scale + u2 * csc_a;
}

Complex closed_form_pseudo_autocorr(const AcfFn& pseudo_acf, const FractionalOrder& order,
                                    double u1, double u2, double acf_half_width) {
  order.require_kernel_evaluable();
  require_cos(order, "closed_form_pseudo_autocorr");
  const double alpha = order.angle();
  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  const double cot_a = cos_a / sin_a;
  const PseudoChainParams p = chain_params_impl(order);
  const double gamma = pseudo_chain_gamma(order, u1, u2);
  const double sin_b = std::sin(p.beta);
  const double cos_b = std::cos(p.beta);

  // Ghat_{2beta}(x) = F_{2beta}{pseudo_acf}(x), by single-point quadrature.
  const FractionalOrder two_beta = FractionalOrder::from_angle(2.0 * p.beta);
  two_beta.require_kernel_evaluable();
  const double x = (u2 - gamma * gamma * sin_a) * (sin_b / (p.c * sin_a)) + u1 * cos_b;
  const double limit = chirp_step_limit(two_beta, acf_half_width, std::abs(x));
  const TimeGrid tau_grid = TimeGrid::symmetric(acf_half_width, 0.5 * limit);
  Complex ghat(0, 0);
  for (std::size_t i = 0; i < tau_grid.count; ++i) {
    const double w = (i == 0 || i + 1 == tau_grid.count) ? 0.5 * tau_grid.step : tau_grid.step;
    ghat += pseudo_acf(tau_grid.point(i)) * kernel_value(two_beta, tau_grid.point(i), x) * w;
  }

  const Complex prefactor =
      std::sqrt(Complex(1.0, -cot_a) / Complex(p.c * p.c, -cot_a));
  const double phase = cot_a * (1.0 - (cos_b * cos_b) / (cos_a * cos_a)) -
                       u1 * (u2 - gamma * gamma * sin_a) * sin_b +
                       0.5 * sin_b * cos_b * u1 * u1 - 0.5 * sin_a * cos_a * gamma * gamma +
                       gamma * u2 * cos_a;
  return prefactor * ghat * std::polar(1.0, phase);
}

PseudoAcfComparison pseudo_autocorr_report(const AcfFn& pseudo_acf, const FractionalOrder& order,
                                           double u1, double u2, double domain_half_width,
                                           double step) {
  PseudoAcfComparison cmp;
  cmp.closed_form = closed_form_pseudo_autocorr(pseudo_acf, order, u1, u2, domain_half_width);
  cmp.oracle = numeric_output_pseudo_autocorr(pseudo_acf, order, u1, u2, domain_half_width, step);
  cmp.abs_discrepancy = std::abs(cmp.closed_form - cmp.oracle);
  cmp.rel_discrepancy = cmp.abs_discrepancy / std::max(std::abs(cmp.oracle), 1e-300);
  return cmp;
}

FractionalPsd fractional_psd(const AcfFn& R, const FractionalOrder& order, const TimeGrid& u_grid,
                             double tau_half_width, double step) {
  order.require_kernel_evaluable();
  const double limit = chirp_step_limit(order, tau_half_width, u_grid.abs_max());
  const double h = (step > 0.0) ? step : std::min(0.5 * limit, 0.01);
  const TimeGrid tau_grid = TimeGrid::symmetric(tau_half_width, h);
  SampledSignal racf = SampledSignal::zeros(tau_grid);
  for (std::size_t i = 0; i < tau_grid.count; ++i) racf.values[i] = R(tau_grid.point(i));
  QuadratureOptions opts;
  opts.warn_on_nonzero_endpoints = false;
  const SampledSignal s = frft_quadrature(racf, order, u_grid, opts);
  FractionalPsd psd;
  psd.order = order;
  psd.u_grid = u_grid;
  psd.values = s.values;
  return psd;
}

PsdRecovery recover_psd_from_output(const CorrelationSurface& surface,
                                    const FractionalOrder& order, double omega,
                                    const std::vector<double>& s_values) {
  order.require_kernel_evaluable();
  require_cos(order, "recover_psd_from_output");
  if (s_values.empty()) throw ValidationError("recover_psd_from_output: no s values");
  const double alpha = order.angle();
  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  const TimeGrid& g = surface.u_grid;
  const auto n = static_cast<Eigen::Index>(g.count);

  double s_abs = 0.0;
  for (double s : s_values) s_abs = std::max(s_abs, std::abs(s));
  const double limit = chirp_step_limit(order, g.abs_max(), s_abs);
  if (g.step > limit) {
    throw GridTooCoarseError("recover_psd_from_output: surface grid step exceeds validity limit");
  }

  PsdRecovery out;
  out.per_s.reserve(s_values.size());
  for (double s : s_values) {
    const double user1 = omega + cos_a * s;
    const double x = (user1 - g.start) / g.step;
    if (x < -1e-9 || x > static_cast<double>(g.count - 1) + 1e-9) {
      throw DomainError("recover_psd_from_output: u1 = " + std::to_string(user1) +
                        " outside surface grid");
    }
    const auto j0 = static_cast<Eigen::Index>(
        std::clamp(std::floor(x), 0.0, static_cast<double>(g.count - 2)));
    const double f = std::clamp(x - static_cast<double>(j0), 0.0, 1.0);
    // F_{alpha, u2 -> s} of the (row-interpolated) surface slice
    Complex acc(0, 0);
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex row = (1.0 - f) * surface.values(j0, k) + f * surface.values(j0 + 1, k);
      const double w = (k == 0 || k + 1 == n) ? 0.5 * g.step : g.step;
      acc += row * kernel_value(order, g.point(k), s) * w;
    }
    const Complex val =
        acc * std::polar(1.0, 0.5 * cos_a * sin_a * s * s) * std::polar(1.0, sin_a * omega * s);
    out.per_s.push_back(val);
  }
  Complex mean(0, 0);
  for (const auto& v : out.per_s) mean += v;
  mean /= static_cast<double>(out.per_s.size());
  out.value = mean;
  double spread = 0.0;
  for (const auto& v : out.per_s) spread = std::max(spread, std::abs(v - mean));
  out.spread = spread / std::max(std::abs(mean), 1e-300);
  return out;
}

CorrelationSurface predicted_autocorr_surface(const AcfFn& R, const FractionalOrder& order,
                                              const TimeGrid& u_grid) {
  CorrelationSurface s;
  s.u_grid = u_grid;
  s.kind = SurfaceKind::Auto;
  s.source = SurfaceSource::Theory;
  const auto n = static_cast<Eigen::Index>(u_grid.count);
  s.values.resize(n, n);
  s.std_err.setZero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      s.values(j, k) = predicted_autocorr(R, order, u_grid.point(j), u_grid.point(k));
    }
  }
  return s;
}

PsdRecovery recover_psd_from_white_delta(double weight, const FractionalOrder& order, double omega,
                                         const std::vector<double>& s_values) {
  order.require_kernel_evaluable();
  require_cos(order, "recover_psd_from_white_delta");
  if (s_values.empty()) throw ValidationError("recover_psd_from_white_delta: no s values");
  const double alpha = order.angle();
  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  PsdRecovery out;
  for (double s : s_values) {
    const double u1 = omega + cos_a * s;
    const Complex val = weight * kernel_value(order, u1, s) *
                        std::polar(1.0, 0.5 * cos_a * sin_a * s * s) *
                        std::polar(1.0, sin_a * omega * s);
    out.per_s.push_back(val);
  }
  Complex mean(0, 0);
  for (const auto& v : out.per_s) mean += v;
  mean /= static_cast<double>(out.per_s.size());
  out.value = mean;
  double spread = 0.0;
  for (const auto& v : out.per_s) spread = std::max(spread, std::abs(v - mean));
  out.spread = spread / std::max(std::abs(mean), 1e-300);
  return out;
}

}  // namespace fracstat
