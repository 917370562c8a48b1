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

#include "fracstat/processes.hpp"

#include <cmath>
#include <random>

#include "fracstat/errors.hpp"
#include "fracstat/order.hpp"
#include "fracstat/parallel.hpp"

namespace fracstat {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

class NormalStream {
 public:
  explicit NormalStream(std::uint64_t substream_seed) : rng_(substream_seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = to_unit(rng_());
    const double u2 = to_unit(rng_());
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

 private:
  static double to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
  }
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

std::uint64_t substream_seed(std::uint64_t seed, std::size_t m) {
  return splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(m) + 1)));
}

// PSD square root via eigenvalue clamp; LLT alone would reject legitimately
// singular cases (e.g. real-valued colored processes where the imaginary
// block vanishes).
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma);
  if (es.info() != Eigen::Success) throw NumericalError("psd_sqrt: eigendecomposition failed");
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double lam_max = std::max(lam.maxCoeff(), 0.0);
  if (lam.minCoeff() < -1e-10 * std::max(lam_max, 1.0)) {
    throw NotPsdError("colored model covariance is not positive semidefinite (min eigenvalue " +
                      std::to_string(lam.minCoeff()) + ")");
  }
  Eigen::VectorXd root = lam.cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal();
}

}  // namespace

Ensemble generate(const StationaryModel& model, const TimeGrid& grid, std::size_t m_count,
                  std::uint64_t seed) {
  if (m_count < 1) throw ValidationError("generate: M must be >= 1");
  const std::size_t n = grid.count;
  Ensemble out;
  out.grid = grid;
  out.model = model;
  out.seed = seed;
  out.realizations.resize(static_cast<Eigen::Index>(m_count), static_cast<Eigen::Index>(n));

  const double sigma2 = (model.noise_level / 2.0) / grid.step;
  const double sd = std::sqrt(sigma2);

  switch (model.kind) {
    case ModelKind::WhiteReal: {
      parallel_for(m_count, [&](std::size_t m) {
        NormalStream g(substream_seed(seed, m));
        for (std::size_t j = 0; j < n; ++j) {
          out.realizations(m, j) = model.mean + Complex(sd * g.next(), 0.0);
        }
      });
      break;
    }
    case ModelKind::WhiteProperComplex: {
      const double c = sd / std::sqrt(2.0);
      parallel_for(m_count, [&](std::size_t m) {
        NormalStream g(substream_seed(seed, m));
        for (std::size_t j = 0; j < n; ++j) {
          const double re = c * g.next();
          const double im = c * g.next();
          out.realizations(m, j) = model.mean + Complex(re, im);
        }
      });
      break;
    }
    case ModelKind::WhiteImproperComplex: {
      const double mag = std::abs(model.rho);
      if (mag > 1.0 + 1e-12) throw ValidationError("generate: |rho| must be <= 1");
      const double phi = std::arg(model.rho);
      // z - mu = e^{i phi/2} (a g1 + i b g2) has E|z-mu|^2 = a^2+b^2 = sigma2
      // and E (z-mu)^2 = e^{i phi} (a^2 - b^2) = rho * sigma2.
      const double a = sd * std::sqrt((1.0 + mag) / 2.0);
      const double b = sd * std::sqrt((1.0 - mag) / 2.0);
      const Complex rot = std::polar(1.0, phi / 2.0);
      parallel_for(m_count, [&](std::size_t m) {
        NormalStream g(substream_seed(seed, m));
        for (std::size_t j = 0; j < n; ++j) {
          const double g1 = g.next();
          const double g2 = g.next();
          out.realizations(m, j) = model.mean + rot * Complex(a * g1, b * g2);
        }
      });
      break;
    }
    case ModelKind::ColoredGaussian: {
      if (!model.acf) throw ValidationError("generate: ColoredGaussian requires an acf");
      const auto ni = static_cast<Eigen::Index>(n);
      Eigen::MatrixXcd C(ni, ni), P = Eigen::MatrixXcd::Zero(ni, ni);
      for (Eigen::Index j = 0; j < ni; ++j) {
        for (Eigen::Index k = 0; k < ni; ++k) {
          const double tau = grid.point(j) - grid.point(k);
          C(j, k) = model.acf(tau);
          if (model.pseudo_acf) P(j, k) = model.pseudo_acf(tau);
        }
      }
      C = 0.5 * (C + C.adjoint()).eval();
      P = 0.5 * (P + P.transpose()).eval();
      // Augmented real covariance of (x, y) with z = x + iy:
      //   E xxᵀ = (Re C + Re P)/2,  E yyᵀ = (Re C − Re P)/2,
      //   E xyᵀ = (Im P − Im C)/2,  E yxᵀ = (Im C + Im P)/2.
      Eigen::MatrixXd sigma(2 * ni, 2 * ni);
      sigma.topLeftCorner(ni, ni) = 0.5 * (C.real() + P.real());
      sigma.bottomRightCorner(ni, ni) = 0.5 * (C.real() - P.real());
      sigma.topRightCorner(ni, ni) = 0.5 * (P.imag() - C.imag());
      sigma.bottomLeftCorner(ni, ni) = 0.5 * (C.imag() + P.imag());
      sigma = 0.5 * (sigma + sigma.transpose()).eval();
      const Eigen::MatrixXd B = psd_sqrt(sigma);
      parallel_for(m_count, [&](std::size_t m) {
        NormalStream g(substream_seed(seed, m));
        Eigen::VectorXd w(2 * ni);
        for (Eigen::Index j = 0; j < 2 * ni; ++j) w(j) = g.next();
        const Eigen::VectorXd xy = B * w;
        for (Eigen::Index j = 0; j < ni; ++j) {
          out.realizations(m, j) = model.mean + Complex(xy(j), xy(ni + j));
        }
      });
      break;
    }
  }
  return out;
}

Complex model_acf(const StationaryModel& model, double tau) {
  switch (model.kind) {
    case ModelKind::WhiteReal:
    case ModelKind::WhiteProperComplex:
    case ModelKind::WhiteImproperComplex:
      return tau == 0.0 ? Complex(model.noise_level / 2.0, 0.0) : Complex(0.0, 0.0);
    case ModelKind::ColoredGaussian:
      return model.acf ? model.acf(tau) : Complex(0.0, 0.0);
  }
  return {};
}

Complex model_pacf(const StationaryModel& model, double tau) {
  switch (model.kind) {
    case ModelKind::WhiteReal:
      return tau == 0.0 ? Complex(model.noise_level / 2.0, 0.0) : Complex(0.0, 0.0);
    case ModelKind::WhiteProperComplex:
      return Complex(0.0, 0.0);
    case ModelKind::WhiteImproperComplex:
      return tau == 0.0 ? model.rho * (model.noise_level / 2.0) : Complex(0.0, 0.0);
    case ModelKind::ColoredGaussian:
      return model.pseudo_acf ? model.pseudo_acf(tau) : Complex(0.0, 0.0);
  }
  return {};
}

}  // namespace fracstat
