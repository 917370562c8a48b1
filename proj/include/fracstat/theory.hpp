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

#include <functional>
#include <vector>

#include "fracstat/estimators.hpp"
#include "fracstat/grid.hpp"
#include "fracstat/order.hpp"

namespace fracstat {

using AcfFn = std::function<Complex(double)>;

/// Mean of the transformed process for a constant input mean μ:
///   μ_α(u) = μ · sqrt(1 + i·tan α) · e^{−i·u²·tan(α)/2}
/// (principal square root). Constant modulus, quadratic phase.
/// Requires tan α finite in addition to the Generic branch.
Complex predicted_mean(Complex mu, const FractionalOrder& order, double u);

/// Closed-form output autocorrelation for a stationary input with
/// autocorrelation R:
///   R_α(u₁,u₂) = sec α · R(sec α·(u₁−u₂)) · e^{i(u₂²−u₁²)·tan(α)/2}.
/// Requires cos α != 0.
Complex predicted_autocorr(const AcfFn& R, const FractionalOrder& order, double u1, double u2);

/// Trapezoid double quadrature of ∬ R(t−s)·K_α(t,u₁)·conj(K_α(s,u₂)) dt ds
/// over [−L,L]². This is the oracle all closed forms are validated against.
/// step <= 0 picks half the chirp validity limit.
Complex numeric_output_autocorr(const AcfFn& R, const FractionalOrder& order, double u1, double u2,
                                double domain_half_width = 12.0, double step = 0.0);

/// Same integral with the second kernel unconjugated (pseudo-autocorrelation).
Complex numeric_output_pseudo_autocorr(const AcfFn& pseudo_acf, const FractionalOrder& order,
                                       double u1, double u2, double domain_half_width = 12.0,
                                       double step = 0.0);

/// Intermediate quantities of the closed-form pseudo-autocorrelation chain:
/// c = sin α cos α + cot α and β = arctan(c²·tan α).
struct PseudoChainParams {
  double c = 0.0;
  double beta = 0.0;
};
PseudoChainParams pseudo_chain_params(const FractionalOrder& order);

/// Γ_α(u₁,u₂) = (u₁ sin α − u₂ csc α)·sqrt(c/cot α) + u₂ csc α.
double pseudo_chain_gamma(const FractionalOrder& order, double u1, double u2);

/// The closed-form pseudo-autocorrelation chain, evaluated verbatim with
/// Ĝ_{2β} = F_{2β}{R̂} computed by quadrature. EXPERIMENTAL: the chain's
/// intermediate steps are not independently derivable, so results must only
/// be consumed through pseudo_autocorr_report, which attaches the oracle.
Complex closed_form_pseudo_autocorr(const AcfFn& pseudo_acf, const FractionalOrder& order,
                                    double u1, double u2, double acf_half_width = 12.0);

struct PseudoAcfComparison {
  Complex closed_form;
  Complex oracle;
  double abs_discrepancy = 0.0;
  double rel_discrepancy = 0.0;  // vs max(|oracle|, eps)
};

/// Closed form and double-quadrature oracle side by side; the oracle is the
/// ground truth.
PseudoAcfComparison pseudo_autocorr_report(const AcfFn& pseudo_acf, const FractionalOrder& order,
                                           double u1, double u2, double domain_half_width = 12.0,
                                           double step = 0.0);

/// S_{z,α}(u) = F_α{R}(u): fractional power spectral density, by quadrature
/// of R sampled on a symmetric τ-grid.
struct FractionalPsd {
  FractionalOrder order = FractionalOrder::from_order(0.5);
  TimeGrid u_grid;
  std::vector<Complex> values;
};
FractionalPsd fractional_psd(const AcfFn& R, const FractionalOrder& order, const TimeGrid& u_grid,
                             double tau_half_width = 12.0, double step = 0.0);

/// Recovery of the fractional PSD from the output autocorrelation surface:
///   S_{z,α}(ω) = F_{α,u₂→s}{R_α(ω + cos α·s, u₂)} · e^{i cos α sin α s²/2} · e^{i sin α ω s},
/// evaluated at each s (the identity holds for every s; the cross-s spread is
/// a consistency diagnostic).
struct PsdRecovery {
  Complex value;                  // mean over s
  double spread = 0.0;            // max_s |S(s) − mean| / |mean|
  std::vector<Complex> per_s;
};
PsdRecovery recover_psd_from_output(const CorrelationSurface& surface,
                                    const FractionalOrder& order, double omega,
                                    const std::vector<double>& s_values);

/// Theoretical surface for a stationary input on a grid (source=Theory),
/// with std_err = 0. kind Auto uses predicted_autocorr.
CorrelationSurface predicted_autocorr_surface(const AcfFn& R, const FractionalOrder& order,
                                              const TimeGrid& u_grid);

/// Analytic recovery for the white delta surface R_α = weight·δ(u₁−u₂):
/// S(ω; s) = weight · K_α(ω + cos α·s, s) · e^{i cos α sin α s²/2} · e^{i sin α ω s}.
PsdRecovery recover_psd_from_white_delta(double weight, const FractionalOrder& order, double omega,
                                         const std::vector<double>& s_values);

}  // namespace fracstat
