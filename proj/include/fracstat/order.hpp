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

#include <cmath>

#include "fracstat/errors.hpp"

namespace fracstat {

inline constexpr double kPi = 3.14159265358979323846;

/// Angles with |sin α| below this are treated as singular: the kernel
/// degenerates toward a delta and the csc α amplitude blows up, so
/// quadrature is meaningless there.
inline constexpr double kSingularSinTol = 1e-3;

enum class AngleClass {
  Generic,          // sin α != 0, kernel evaluable
  Identity,         // α = 2πp  (kernel = δ(u−t))
  Parity,           // α + π = 2πp  (kernel = δ(u+t))
  FourierMultiple,  // α = π/2 + πp; still kernel-evaluable (sin α != 0)
};

/// Transform order a and rotation angle α = aπ/2, kept mutually consistent.
///
/// Any angle with |sin α| ≥ 1e−3 is accepted by kernel-based operations,
/// including |α| ≥ π/2 (needed by the DTFRFT shift and by chirp transforms
/// at derived angles), even though the source analysis restricts itself to
/// α ∈ (−π/2, π/2) \ {0}.
class FractionalOrder {
 public:
  static FractionalOrder from_order(double a) { return FractionalOrder(a, a * kPi / 2.0); }
  static FractionalOrder from_angle(double alpha) {
    return FractionalOrder(alpha * 2.0 / kPi, alpha);
  }

  double order() const { return a_; }
  double angle() const { return alpha_; }

  FractionalOrder negated() const { return FractionalOrder(-a_, -alpha_); }

  AngleClass classify() const {
    const double two_pi = 2.0 * kPi;
    const double m_id = std::remainder(alpha_, two_pi);
    if (std::abs(m_id) < kSingularSinTol) return AngleClass::Identity;
    const double m_par = std::remainder(alpha_ + kPi, two_pi);
    if (std::abs(m_par) < kSingularSinTol) return AngleClass::Parity;
    const double m_four = std::remainder(alpha_ - kPi / 2.0, kPi);
    if (std::abs(m_four) < kSingularSinTol) return AngleClass::FourierMultiple;
    return AngleClass::Generic;
  }

  /// True when the chirp kernel is pointwise evaluable (|sin α| not tiny).
  bool kernel_evaluable() const { return std::abs(std::sin(alpha_)) >= kSingularSinTol; }

  void require_kernel_evaluable() const {
    if (!kernel_evaluable()) {
      throw SingularAngleError("angle alpha=" + std::to_string(alpha_) +
                               " is singular (|sin alpha| < 1e-3); the delta-function "
                               "branches are not pointwise evaluable");
    }
  }

 private:
  FractionalOrder(double a, double alpha) : a_(a), alpha_(alpha) {}
  double a_;
  double alpha_;
};

}  // namespace fracstat
