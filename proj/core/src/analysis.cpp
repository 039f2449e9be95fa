#include "quartic/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "quartic/errors.hpp"

namespace quartic::analysis {
namespace {

using std::numbers::pi;

constexpr int kInitialNodes = 4096;
constexpr int kMaxNodes = 1 << 20;
constexpr double kQuadratureAgreement = 1e-10;

double equation_mass_sign(Family family) {
  return family == Family::Ssb ? -1.0 : 1.0;
}

// Coefficients from samples f(j P / M), j = 0..M-1.
struct Projection {
  std::vector<double> coefficients;
  double mean = 0.0;
};

Projection project(const std::vector<double>& samples, SeriesKind kind, int terms) {
  const auto m = static_cast<double>(samples.size());
  Projection out;
  out.coefficients.resize(static_cast<std::size_t>(terms));
  for (double v : samples) out.mean += v;
  out.mean /= m;
  for (int n = 0; n < terms; ++n) {
    // Angle advance per node for this harmonic; the period maps to 2 pi.
    const int harmonic = kind == SeriesKind::Sn ? 2 * n + 1 : n + 1;
    double acc = 0.0;
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const double angle = 2.0 * pi * static_cast<double>(j) / m * harmonic;
      acc += samples[j] * (kind == SeriesKind::Sn ? std::sin(angle) : std::cos(angle));
    }
    out.coefficients[static_cast<std::size_t>(n)] = 2.0 * acc / m;
  }
  return out;
}

}  // namespace

double residual(const SolutionSpec& spec, double t, std::span<const double> x) {
  const double u = spec.momentum.contract(t, x) + spec.theta;
  const double f = evaluate_phase(spec, u);
  const double f2 = phase_second_derivative(spec, u);
  const double p2 = spec.momentum.minkowski_square();
  return p2 * f2 + equation_mass_sign(spec.family) * spec.mu0 * spec.mu0 * f +
         spec.lambda * f * f * f;
}

double residual_max(const SolutionSpec& spec, int samples) {
  if (samples < 8) {
    throw DomainError("residual_max needs at least 8 samples, got " +
                      std::to_string(samples));
  }
  const double period = spec.phase_period();
  const std::size_t dims = spec.momentum.spatial.size();
  std::vector<double> x(dims, 0.0);

  const int rest_count = samples / 2;
  const int boosted_count = samples - rest_count;
  double worst = 0.0;

  // Time axis at the origin: u = E t + theta.
  const double e = spec.momentum.energy;
  for (int j = 0; j < rest_count; ++j) {
    const double t = period * j / rest_count / e;
    worst = std::max(worst, std::abs(residual(spec, t, x)));
  }

  // Boosted line x = beta t e_1: du/dt = E - beta p_1 > 0 because E > |p|.
  constexpr double beta = 0.6;
  const double p1 = dims > 0 ? spec.momentum.spatial[0] : 0.0;
  const double rate = e - (dims > 0 ? beta * p1 : 0.0);
  for (int j = 0; j < boosted_count; ++j) {
    const double t = period * (j + 0.5) / boosted_count / rate;
    if (dims > 0) x[0] = beta * t;
    worst = std::max(worst, std::abs(residual(spec, t, x)));
  }
  return worst;
}

double residual_scale(const SolutionSpec& spec) {
  const double a = spec.amplitude;
  if (spec.lambda > 0.0) return spec.lambda * a * a * a;
  return spec.momentum.minkowski_square() * a;
}

int FourierSeries::harmonic(std::size_t i) const {
  return kind == SeriesKind::Sn ? 2 * static_cast<int>(i) + 1 : static_cast<int>(i) + 1;
}

double periodic_average(const std::function<double(double)>& f, double period) {
  int nodes = kInitialNodes;
  auto estimate = [&](int count) {
    double acc = 0.0;
    for (int j = 0; j < count; ++j) acc += f(period * j / count);
    return acc / count;
  };
  double previous = estimate(nodes);
  while (nodes < kMaxNodes) {
    nodes *= 2;
    const double current = estimate(nodes);
    if (std::abs(current - previous) <=
        kQuadratureAgreement * std::max(1.0, std::abs(current))) {
      return current;
    }
    previous = current;
  }
  throw AnalysisError("periodic average did not converge");
}

FourierSeries fourier_series(const SolutionSpec& spec, int terms) {
  if (terms < 1) throw DomainError("fourier_series needs at least one term");

  const double k = elliptic::complete_k(spec.parameter);
  FourierSeries series;
  series.kind = spec.family == Family::Ssb ? SeriesKind::Dn : SeriesKind::Sn;
  series.fundamental = series.kind == SeriesKind::Sn ? pi / (2.0 * k) : pi / k;
  series.truncation = terms;

  const double period = spec.phase_period();
  auto sample = [&](int count) {
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) v[static_cast<std::size_t>(j)] = evaluate_phase(spec, period * j / count);
    return v;
  };

  const double tolerance = kQuadratureAgreement * std::max(1.0, spec.amplitude);
  int nodes = kInitialNodes;
  Projection previous = project(sample(nodes), series.kind, terms);
  for (;;) {
    if (nodes >= kMaxNodes) throw AnalysisError("Fourier projection did not converge");
    nodes *= 2;
    Projection current = project(sample(nodes), series.kind, terms);
    double change = std::abs(current.mean - previous.mean);
    for (std::size_t i = 0; i < current.coefficients.size(); ++i) {
      change = std::max(change, std::abs(current.coefficients[i] - previous.coefficients[i]));
    }
    previous = std::move(current);
    if (change <= tolerance) break;
  }

  series.coefficients = std::move(previous.coefficients);
  series.constant_term = series.kind == SeriesKind::Dn ? previous.mean : 0.0;
  return series;
}

double partial_sum(const FourierSeries& series, double u) {
  double acc = series.kind == SeriesKind::Dn ? series.constant_term : 0.0;
  for (std::size_t i = 0; i < series.coefficients.size(); ++i) {
    const double angle = series.harmonic(i) * series.fundamental * u;
    acc += series.coefficients[i] *
           (series.kind == SeriesKind::Sn ? std::sin(angle) : std::cos(angle));
  }
  return acc;
}

double massless_closed_form_coefficient(const SolutionSpec& spec, int n) {
  const double k = elliptic::complete_k(elliptic::EllipticParameter(-1.0));
  const double alternating = n % 2 == 0 ? 1.0 : -1.0;
  return sign_factor(spec.sign) * spec.amplitude * (2.0 * pi / k) * alternating *
         std::exp(-(n + 0.5) * pi) / (1.0 + std::exp(-(2.0 * n + 1.0) * pi));
}

double ssb_closed_form_coefficient(const SolutionSpec& spec, int n) {
  const double k = elliptic::complete_k(elliptic::EllipticParameter(-1.0));
  const double v = sign_factor(spec.sign) * spec.amplitude;
  if (n == 0) return v * pi / (2.0 * k);
  const double alternating = n % 2 == 0 ? 1.0 : -1.0;
  return v * (2.0 * pi / k) * alternating * std::exp(-n * pi) /
         (1.0 + std::exp(-2.0 * n * pi));
}

double massless_level(int n, double lambda, double mu) {
  const double k = elliptic::complete_k(elliptic::EllipticParameter(-1.0));
  const double fundamental = (pi / (2.0 * k)) * std::pow(lambda / 2.0, 0.25) * mu;
  return (2 * n + 1) * fundamental;
}

std::vector<SpectrumLine> mass_spectrum(const SolutionSpec& spec, int n_max) {
  if (n_max < 0) throw DomainError("mass_spectrum needs n_max >= 0");

  const FourierSeries series = fourier_series(spec, std::max(1, n_max + 1));
  std::vector<SpectrumLine> lines;
  lines.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    SpectrumLine line;
    line.n = n;
    switch (spec.family) {
      case Family::Massive: {
        const double k = elliptic::complete_k(spec.parameter);
        line.energy = (2 * n + 1) * (pi / (2.0 * k)) *
                      renormalized_mass(spec.mu0, spec.mu, spec.lambda);
        line.amplitude = std::abs(series.coefficients[static_cast<std::size_t>(n)]);
        break;
      }
      case Family::Massless:
        line.energy = massless_level(n, spec.lambda, spec.mu);
        line.amplitude = std::abs(series.coefficients[static_cast<std::size_t>(n)]);
        break;
      case Family::Ssb: {
        const double k = elliptic::complete_k(elliptic::EllipticParameter(-1.0));
        line.energy = n * (pi / k) * spec.mu0 / std::sqrt(3.0);
        line.amplitude = n == 0 ? std::abs(series.constant_term)
                                : std::abs(series.coefficients[static_cast<std::size_t>(n - 1)]);
        break;
      }
    }
    lines.push_back(line);
  }
  return lines;
}

}  // namespace quartic::analysis
