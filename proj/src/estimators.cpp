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

#include "fracstat/estimators.hpp"

#include <cmath>

#include "fracstat/errors.hpp"

namespace fracstat {

namespace {

// Deviation-over-stderr with a guard for deterministic (zero-stderr) entries.
double sigmas(double dev, double se, double scale) {
  if (se > 0.0) return dev / se;
  return dev <= 1e-12 * std::max(scale, 1.0) ? 0.0 : std::numeric_limits<double>::infinity();
}

void require_rows(const Eigen::MatrixXcd& r, const TimeGrid& g) {
  if (static_cast<std::size_t>(r.cols()) != g.count) {
    throw DimensionMismatchError("estimator: realization length != grid count");
  }
  if (r.rows() < 2) throw TooFewRealizationsError("estimator: needs M >= 2 realizations");
}

CorrelationSurface estimate_products(const Eigen::MatrixXcd& z, const TimeGrid& g,
                                     SurfaceKind kind) {
  require_rows(z, g);
  const Eigen::Index m_count = z.rows();
  const Eigen::Index n = z.cols();
  CorrelationSurface s;
  s.u_grid = g;
  s.kind = kind;
  s.source = SurfaceSource::MonteCarlo;
  s.values.setZero(n, n);
  s.std_err.setZero(n, n);

  const Eigen::MatrixXcd second = (kind == SurfaceKind::Auto) ? z.conjugate() : z;
  // Upper triangle (incl. diagonal) estimated, lower mirrored so the
  // Hermitian/symmetric structure holds exactly by construction.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j; k < n; ++k) {
      Complex acc(0, 0);
      for (Eigen::Index m = 0; m < m_count; ++m) acc += z(m, j) * second(m, k);
      const Complex mean = acc / static_cast<double>(m_count);
      double var = 0.0;
      for (Eigen::Index m = 0; m < m_count; ++m) var += std::norm(z(m, j) * second(m, k) - mean);
      const double se =
          std::sqrt(var / (static_cast<double>(m_count) * (static_cast<double>(m_count) - 1.0)));
      s.values(j, k) = mean;
      s.std_err(j, k) = se;
      if (k != j) {
        s.values(k, j) = (kind == SurfaceKind::Auto) ? std::conj(mean) : mean;
        s.std_err(k, j) = se;
      }
    }
  }
  return s;
}

}  // namespace

Complex CorrelationSurface::value_at(double u1, double u2) const {
  const auto locate = [this](double u) {
    const double x = (u - u_grid.start) / u_grid.step;
    if (x < -1e-9 || x > static_cast<double>(u_grid.count - 1) + 1e-9) {
      throw DomainError("CorrelationSurface: point outside surface grid");
    }
    return std::clamp(x, 0.0, static_cast<double>(u_grid.count - 1));
  };
  const double x1 = locate(u1);
  const double x2 = locate(u2);
  const auto j0 = static_cast<Eigen::Index>(std::min<double>(std::floor(x1),
                                                             static_cast<double>(u_grid.count - 2)));
  const auto k0 = static_cast<Eigen::Index>(std::min<double>(std::floor(x2),
                                                             static_cast<double>(u_grid.count - 2)));
  const double f1 = x1 - static_cast<double>(j0);
  const double f2 = x2 - static_cast<double>(k0);
  return (1 - f1) * (1 - f2) * values(j0, k0) + f1 * (1 - f2) * values(j0 + 1, k0) +
         (1 - f1) * f2 * values(j0, k0 + 1) + f1 * f2 * values(j0 + 1, k0 + 1);
}

MeanEstimate estimate_mean(const Eigen::MatrixXcd& realizations, const TimeGrid& u_grid) {
  require_rows(realizations, u_grid);
  const Eigen::Index m_count = realizations.rows();
  MeanEstimate e;
  e.u_grid = u_grid;
  e.mean = realizations.colwise().mean();
  e.std_err.resize(realizations.cols());
  for (Eigen::Index j = 0; j < realizations.cols(); ++j) {
    double var = 0.0;
    for (Eigen::Index m = 0; m < m_count; ++m) var += std::norm(realizations(m, j) - e.mean(j));
    e.std_err(j) =
        std::sqrt(var / (static_cast<double>(m_count) * (static_cast<double>(m_count) - 1.0)));
  }
  return e;
}

CorrelationSurface estimate_autocorr(const Eigen::MatrixXcd& realizations,
                                     const TimeGrid& u_grid) {
  return estimate_products(realizations, u_grid, SurfaceKind::Auto);
}

CorrelationSurface estimate_pseudo_autocorr(const Eigen::MatrixXcd& realizations,
                                            const TimeGrid& u_grid) {
  return estimate_products(realizations, u_grid, SurfaceKind::Pseudo);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Stationary: return "Stationary";
    case Verdict::NonstationaryMean: return "NonstationaryMean";
    case Verdict::NonstationaryACF: return "NonstationaryACF";
    case Verdict::ImproperOutput: return "ImproperOutput";
  }
  return "?";
}

StationarityReport stationarity_verdict(const MeanEstimate& mean, const CorrelationSurface& acf,
                                        const CorrelationSurface* pacf, bool input_is_complex,
                                        double tol_sigma) {
  if (!(mean.u_grid == acf.u_grid) || (pacf && !(pacf->u_grid == acf.u_grid))) {
    throw GridMismatchError("stationarity_verdict: estimates on different grids");
  }
  const Eigen::Index n = acf.values.rows();
  StationarityReport r;
  r.input_is_complex = input_is_complex;
  r.tol_sigma = tol_sigma;

  const double scale = acf.values.cwiseAbs().maxCoeff();

  // Mean test: every mean(u) within tol_sigma stderr of the common average.
  const Complex avg = mean.mean.mean();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double dev = std::abs(mean.mean(j) - avg);
    const double sg = sigmas(dev, mean.std_err(j), scale);
    r.mean_max_dev = std::max(r.mean_max_dev, dev);
    r.mean_max_sigma = std::max(r.mean_max_sigma, sg);
  }
  r.mean_constant = r.mean_max_sigma <= tol_sigma;

  // Toeplitz test: entries within each diagonal against the diagonal's mean.
  for (Eigen::Index d = 0; d < n; ++d) {
    const Eigen::Index len = n - d;
    Complex vsum(0, 0);
    double asum = 0.0;
    for (Eigen::Index j = 0; j < len; ++j) {
      vsum += acf.values(j, j + d);
      asum += std::abs(acf.values(j, j + d));
    }
    const Complex vmean = vsum / static_cast<double>(len);
    const double amean = asum / static_cast<double>(len);
    for (Eigen::Index j = 0; j < len; ++j) {
      const double dev = std::abs(acf.values(j, j + d) - vmean);
      const double sg = sigmas(dev, acf.std_err(j, j + d), scale);
      r.acf_max_dev = std::max(r.acf_max_dev, dev);
      r.acf_max_sigma = std::max(r.acf_max_sigma, sg);
      const double adev = std::abs(std::abs(acf.values(j, j + d)) - amean);
      const double asg = sigmas(adev, acf.std_err(j, j + d), scale);
      r.acf_amp_max_dev = std::max(r.acf_amp_max_dev, adev);
      r.acf_amp_max_sigma = std::max(r.acf_amp_max_sigma, asg);
    }
  }
  r.acf_toeplitz = r.acf_max_sigma <= tol_sigma;
  r.acf_amplitude_toeplitz = r.acf_amp_max_sigma <= tol_sigma;

  if (pacf) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = j; k < n; ++k) {
        const double mag = std::abs(pacf->values(j, k));
        const double sg = sigmas(mag, pacf->std_err(j, k), scale);
        r.pseudo_max_mag = std::max(r.pseudo_max_mag, mag);
        r.pseudo_max_sigma = std::max(r.pseudo_max_sigma, sg);
      }
    }
    r.pseudo_vanishes = r.pseudo_max_sigma <= tol_sigma;
  } else {
    r.pseudo_vanishes = true;
  }

  if (!r.mean_constant) {
    r.verdict = Verdict::NonstationaryMean;
  } else if (!r.acf_toeplitz) {
    r.verdict = Verdict::NonstationaryACF;
  } else if (input_is_complex && !r.pseudo_vanishes) {
    r.verdict = Verdict::ImproperOutput;
  } else {
    r.verdict = Verdict::Stationary;
  }
  return r;
}

}  // namespace fracstat
