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

#include <complex>
#include <cstddef>
#include <vector>

#include "fracstat/errors.hpp"

namespace fracstat {

using Complex = std::complex<double>;

/// Uniform sample grid; sample n sits at start + n*step.
struct TimeGrid {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  TimeGrid() = default;
  TimeGrid(double start_, double step_, std::size_t count_)
      : start(start_), step(step_), count(count_) {
    if (step <= 0.0) throw ValidationError("TimeGrid: step must be > 0");
    if (count < 2) throw ValidationError("TimeGrid: count must be >= 2");
  }

  /// Symmetric grid [-half_width, half_width] with the given step (inclusive ends).
  static TimeGrid symmetric(double half_width, double step_) {
    const auto n = static_cast<std::size_t>(std::llround(2.0 * half_width / step_)) + 1;
    return TimeGrid(-half_width, step_, n);
  }

  double point(std::size_t n) const { return start + static_cast<double>(n) * step; }
  double back() const { return point(count - 1); }
  /// Largest |t| over the grid.
  double abs_max() const { return std::max(std::abs(start), std::abs(back())); }

  std::vector<double> points() const {
    std::vector<double> p(count);
    for (std::size_t n = 0; n < count; ++n) p[n] = point(n);
    return p;
  }

  bool operator==(const TimeGrid& o) const {
    return start == o.start && step == o.step && count == o.count;
  }
};

/// Complex samples on a uniform grid.
struct SampledSignal {
  TimeGrid grid;
  std::vector<Complex> values;

  SampledSignal() = default;
  SampledSignal(TimeGrid g, std::vector<Complex> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.count) {
      throw DimensionMismatchError("SampledSignal: values.size() != grid.count");
    }
  }

  static SampledSignal zeros(TimeGrid g) { return SampledSignal(g, std::vector<Complex>(g.count)); }

  std::size_t size() const { return values.size(); }

  /// Discrete L2 norm, weighted by the grid step: sqrt(Σ |z|² Δt).
  double l2_norm() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    return std::sqrt(s * grid.step);
  }
};

}  // namespace fracstat
