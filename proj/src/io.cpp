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

#include "fracstat/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fracstat/errors.hpp"

namespace fracstat::io {

namespace {

using nlohmann::json;

json grid_to_json(const TimeGrid& g) {
  return json{{"start", g.start}, {"step", g.step}, {"count", g.count}};
}

TimeGrid grid_from_json(const json& j) {
  return TimeGrid(j.at("start").get<double>(), j.at("step").get<double>(),
                  j.at("count").get<std::size_t>());
}

std::string model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::WhiteReal: return "white_real";
    case ModelKind::WhiteProperComplex: return "white_proper_complex";
    case ModelKind::WhiteImproperComplex: return "white_improper_complex";
    case ModelKind::ColoredGaussian: return "colored_gaussian";
  }
  return "?";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed for " + path.string() + ": " + ec.message());
}

void write_signal_csv(const SampledSignal& signal, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "t,re,im\n";
  for (std::size_t n = 0; n < signal.size(); ++n) {
    out << format_double(signal.grid.point(n)) << ',' << format_double(signal.values[n].real())
        << ',' << format_double(signal.values[n].imag()) << '\n';
  }
  write_text(path, out.str());
}

SampledSignal read_signal_csv(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> t;
  std::vector<Complex> v;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double tt, re, im;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &tt, &re, &im) != 3) {
      throw IoError("bad signal CSV row in " + path.string() + ": " + line);
    }
    t.push_back(tt);
    v.emplace_back(re, im);
  }
  if (t.size() < 2) throw IoError("signal CSV has fewer than 2 rows: " + path.string());
  const double step = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  return SampledSignal(TimeGrid(t.front(), step, t.size()), std::move(v));
}

void write_ensemble(const Ensemble& ensemble, const std::filesystem::path& prefix) {
  json manifest{
      {"model",
       {{"kind", model_kind_name(ensemble.model.kind)},
        {"mean", {ensemble.model.mean.real(), ensemble.model.mean.imag()}},
        {"noise_level", ensemble.model.noise_level},
        {"rho", {ensemble.model.rho.real(), ensemble.model.rho.imag()}}}},
      {"grid", grid_to_json(ensemble.grid)},
      {"M", ensemble.realization_count()},
      {"seed", ensemble.seed},
  };
  write_text(prefix.string() + ".json", manifest.dump(2) + "\n");

  std::ostringstream out;
  out << "m,n,re,im\n";
  for (Eigen::Index m = 0; m < ensemble.realizations.rows(); ++m) {
    for (Eigen::Index n = 0; n < ensemble.realizations.cols(); ++n) {
      out << m << ',' << n << ',' << format_double(ensemble.realizations(m, n).real()) << ','
          << format_double(ensemble.realizations(m, n).imag()) << '\n';
    }
  }
  write_text(prefix.string() + ".csv", out.str());
}

Ensemble read_ensemble(const std::filesystem::path& prefix) {
  const json manifest = json::parse(read_file(prefix.string() + ".json"));
  Ensemble e;
  e.grid = grid_from_json(manifest.at("grid"));
  e.seed = manifest.at("seed").get<std::uint64_t>();
  const auto m_count = manifest.at("M").get<std::size_t>();
  const std::string kind = manifest.at("model").at("kind").get<std::string>();
  if (kind == "white_real") e.model.kind = ModelKind::WhiteReal;
  else if (kind == "white_proper_complex") e.model.kind = ModelKind::WhiteProperComplex;
  else if (kind == "white_improper_complex") e.model.kind = ModelKind::WhiteImproperComplex;
  else if (kind == "colored_gaussian") e.model.kind = ModelKind::ColoredGaussian;
  else throw IoError("unknown model kind in manifest: " + kind);
  const auto mean = manifest.at("model").at("mean");
  e.model.mean = Complex(mean.at(0).get<double>(), mean.at(1).get<double>());
  e.model.noise_level = manifest.at("model").at("noise_level").get<double>();
  const auto rho = manifest.at("model").at("rho");
  e.model.rho = Complex(rho.at(0).get<double>(), rho.at(1).get<double>());

  e.realizations.setZero(static_cast<Eigen::Index>(m_count),
                         static_cast<Eigen::Index>(e.grid.count));
  std::istringstream in(read_file(prefix.string() + ".csv"));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    long m, n;
    double re, im;
    if (std::sscanf(line.c_str(), "%ld,%ld,%lf,%lf", &m, &n, &re, &im) != 4) {
      throw IoError("bad ensemble CSV row: " + line);
    }
    if (m < 0 || m >= e.realizations.rows() || n < 0 || n >= e.realizations.cols()) {
      throw IoError("ensemble CSV index out of range: " + line);
    }
    e.realizations(m, n) = Complex(re, im);
  }
  return e;
}

void write_surface(const CorrelationSurface& surface, const std::filesystem::path& prefix) {
  json manifest{
      {"kind", surface.kind == SurfaceKind::Auto ? "auto" : "pseudo"},
      {"source", surface.source == SurfaceSource::MonteCarlo ? "monte_carlo" : "theory"},
      {"u_grid", grid_to_json(surface.u_grid)},
  };
  write_text(prefix.string() + ".json", manifest.dump(2) + "\n");
  std::ostringstream out;
  out << "j,k,re,im,stderr\n";
  for (Eigen::Index j = 0; j < surface.values.rows(); ++j) {
    for (Eigen::Index k = 0; k < surface.values.cols(); ++k) {
      out << j << ',' << k << ',' << format_double(surface.values(j, k).real()) << ','
          << format_double(surface.values(j, k).imag()) << ','
          << format_double(surface.std_err(j, k)) << '\n';
    }
  }
  write_text(prefix.string() + ".csv", out.str());
}

CorrelationSurface read_surface(const std::filesystem::path& prefix) {
  const json manifest = json::parse(read_file(prefix.string() + ".json"));
  CorrelationSurface s;
  s.u_grid = grid_from_json(manifest.at("u_grid"));
  s.kind = manifest.at("kind").get<std::string>() == "auto" ? SurfaceKind::Auto
                                                            : SurfaceKind::Pseudo;
  s.source = manifest.at("source").get<std::string>() == "theory" ? SurfaceSource::Theory
                                                                  : SurfaceSource::MonteCarlo;
  const auto n = static_cast<Eigen::Index>(s.u_grid.count);
  s.values.setZero(n, n);
  s.std_err.setZero(n, n);
  std::istringstream in(read_file(prefix.string() + ".csv"));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    long j, k;
    double re, im, se;
    if (std::sscanf(line.c_str(), "%ld,%ld,%lf,%lf,%lf", &j, &k, &re, &im, &se) != 5) {
      throw IoError("bad surface CSV row: " + line);
    }
    if (j < 0 || j >= n || k < 0 || k >= n) throw IoError("surface CSV index out of range");
    s.values(j, k) = Complex(re, im);
    s.std_err(j, k) = se;
  }
  return s;
}

void write_mean_csv(const MeanEstimate& mean, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "u,re,im,stderr\n";
  for (Eigen::Index j = 0; j < mean.mean.size(); ++j) {
    out << format_double(mean.u_grid.point(static_cast<std::size_t>(j))) << ','
        << format_double(mean.mean(j).real()) << ',' << format_double(mean.mean(j).imag()) << ','
        << format_double(mean.std_err(j)) << '\n';
  }
  write_text(path, out.str());
}

void write_coefficients_csv(const FrfsCoefficients& coeffs, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "n,re,im\n";
  for (int n = coeffs.config.n_min; n <= coeffs.config.n_max; ++n) {
    out << n << ',' << format_double(coeffs.at(n).real()) << ','
        << format_double(coeffs.at(n).imag()) << '\n';
  }
  write_text(path, out.str());
}

void write_dfrft_matrix(const DfrftMatrix& matrix, const std::filesystem::path& prefix) {
  json manifest{{"n", matrix.n}, {"a", matrix.order}, {"format", "csv"}};
  write_text(prefix.string() + ".json", manifest.dump(2) + "\n");
  std::ostringstream out;
  for (Eigen::Index j = 0; j < matrix.matrix.rows(); ++j) {
    for (Eigen::Index k = 0; k < matrix.matrix.cols(); ++k) {
      if (k) out << ',';
      out << format_double(matrix.matrix(j, k).real()) << ','
          << format_double(matrix.matrix(j, k).imag());
    }
    out << '\n';
  }
  write_text(prefix.string() + ".csv", out.str());
}

}  // namespace fracstat::io
