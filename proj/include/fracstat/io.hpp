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
#include <string>

#include "fracstat/dfrft.hpp"
#include "fracstat/estimators.hpp"
#include "fracstat/frfs.hpp"
#include "fracstat/processes.hpp"

namespace fracstat::io {

/// Atomic text write (temp file + rename).
void write_text(const std::filesystem::path& path, const std::string& content);

/// CSV with header `t,re,im`, 12 significant digits.
void write_signal_csv(const SampledSignal& signal, const std::filesystem::path& path);
SampledSignal read_signal_csv(const std::filesystem::path& path);

/// JSON manifest (model, grid, M, seed) at <prefix>.json plus CSV block
/// `m,n,re,im` at <prefix>.csv.
void write_ensemble(const Ensemble& ensemble, const std::filesystem::path& prefix);
Ensemble read_ensemble(const std::filesystem::path& prefix);

/// CSV `j,k,re,im,stderr` at <prefix>.csv and a JSON sidecar with grid,
/// kind and source at <prefix>.json.
void write_surface(const CorrelationSurface& surface, const std::filesystem::path& prefix);
CorrelationSurface read_surface(const std::filesystem::path& prefix);

/// CSV `u,re,im,stderr`.
void write_mean_csv(const MeanEstimate& mean, const std::filesystem::path& path);

/// CSV `n,re,im`.
void write_coefficients_csv(const FrfsCoefficients& coeffs, const std::filesystem::path& path);

/// JSON manifest {n, a, format:"csv"} at <prefix>.json plus CSV rows with
/// each complex entry as a (re, im) column pair at <prefix>.csv.
void write_dfrft_matrix(const DfrftMatrix& matrix, const std::filesystem::path& prefix);

std::string format_double(double v);

}  // namespace fracstat::io
