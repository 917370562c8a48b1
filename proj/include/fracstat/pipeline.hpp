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

#include <filesystem>
#include <optional>
#include <string>

#include "fracstat/estimators.hpp"
#include "fracstat/processes.hpp"

namespace fracstat {

enum class TransformKind { Dfrft, FrftQuad, Frfs, Dtfrft };

/// One experiment: model → transform → estimates → verdict/comparisons.
/// Parsed from a single JSON document; CLI flags override individual fields.
struct ExperimentConfig {
  StationaryModel model;
  std::string acf_name = "none";         // exp | gauss | none (colored models)
  double acf_scale = 1.0;
  std::string pseudo_acf_name = "none";  // none | same_as_acf
  TimeGrid grid{-8.0, 0.125, 129};
  double order = 0.5;
  TransformKind transform = TransformKind::Dfrft;
  std::optional<TimeGrid> u_grid;        // frft_quad output grid
  int frfs_n_min = -8;
  int frfs_n_max = 8;
  std::size_t m_count = 1000;
  std::optional<std::uint64_t> seed;
  double tol_sigma = 4.0;
  std::filesystem::path out_dir = "out";

  void validate() const;  // throws ValidationError / SeedRequiredError
  std::uint64_t require_seed() const;
};

ExperimentConfig parse_config_file(const std::filesystem::path& path);
ExperimentConfig parse_config_json(const std::string& text);

/// Per-realization transform of an ensemble. The result reuses the Ensemble
/// container: grid is the fractional-domain grid (or the coefficient index
/// grid for FRFS/DTFRFT).
struct TransformedEnsemble {
  TimeGrid u_grid;
  Eigen::MatrixXcd realizations;  // M x K
  TransformKind kind = TransformKind::Dfrft;
  double order = 0.0;
};

Ensemble cmd_gen(const ExperimentConfig& config);
TransformedEnsemble cmd_transform(const ExperimentConfig& config, const Ensemble& ensemble);

struct EstimateBundle {
  MeanEstimate mean;
  CorrelationSurface acf;
  CorrelationSurface pacf;
};
EstimateBundle cmd_estimate(const ExperimentConfig& config, const TransformedEnsemble& transformed);

/// Closed-form artifacts for the configured model/order (files under out_dir).
void cmd_theory(const ExperimentConfig& config);

struct VerifyResult {
  StationarityReport report;
  /// Max deviation-in-stderr of the MC autocorrelation against the exact
  /// windowed expectation of the pipeline (A C Aᴴ), and against the
  /// infinite-window closed form where one exists.
  double max_sigma_vs_expectation = 0.0;
  double max_sigma_vs_closed_form = 0.0;
  double closed_form_vs_expectation_rel = 0.0;  // window-truncation size
  double max_offdiag = 0.0;
  double pseudo_max_sigma_vs_prediction = 0.0;  // white kinds, vs F P F^T
  std::filesystem::path report_path;
};
VerifyResult cmd_verify(const ExperimentConfig& config);

/// Resolve the model's closed-form ACF from (acf_name, acf_scale). Throws for
/// unknown names.
std::function<Complex(double)> make_named_acf(const std::string& name, double scale);

}  // namespace fracstat
