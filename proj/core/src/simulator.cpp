#include "quartic/simulator.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <sstream>

#include "quartic/errors.hpp"

namespace quartic::sim {
namespace {

using std::numbers::pi;

constexpr double kPeriodMatchTolerance = 1e-9;
constexpr double kMinPeriodsForFrequency = 8.0;

// FFTW planning is not thread safe; execution is.
std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double sample_spacing(std::span<const std::pair<double, double>> series) {
  if (series.size() < 16) throw AnalysisError("frequency estimate needs at least 16 samples");
  const double h = series[1].first - series[0].first;
  if (!(h > 0.0)) throw AnalysisError("series times must be increasing");
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double d = series[i].first - series[i - 1].first;
    if (std::abs(d - h) > 1e-6 * h) throw AnalysisError("series is not uniformly sampled");
  }
  return h;
}

double hann(std::size_t j, std::size_t n) {
  return 0.5 * (1.0 - std::cos(2.0 * pi * static_cast<double>(j) / static_cast<double>(n - 1)));
}

std::vector<double> centred_values(std::span<const std::pair<double, double>> series) {
  double mean = 0.0;
  for (const auto& s : series) mean += s.second;
  mean /= static_cast<double>(series.size());
  std::vector<double> v;
  v.reserve(series.size());
  for (const auto& s : series) v.push_back(s.second - mean);
  return v;
}

}  // namespace

void GridSpec::validate() const {
  std::ostringstream os;
  if (!is_power_of_two(nx) || nx < 4) {
    os << "nx must be a power of two >= 4, got " << nx;
    throw ConfigError(os.str());
  }
  if (!std::isfinite(length) || !(length > 0.0)) {
    os << "domain length must be finite and > 0, got " << length;
    throw ConfigError(os.str());
  }
  const double c = std::abs(cfl());
  if (!std::isfinite(c) || !(c > 0.0) || c > kMaxCfl) {
    os << "CFL number " << cfl() << " outside (0, " << kMaxCfl << "]";
    throw ConfigError(os.str());
  }
}

GridSpec GridSpec::from_cfl(int nx, double length, double cfl) {
  GridSpec g;
  g.nx = nx;
  g.length = length;
  g.dt = cfl * length / nx;
  g.validate();
  return g;
}

FieldParams field_params(const SolutionSpec& spec) {
  FieldParams p;
  p.equation = spec.family == Family::Ssb ? Equation::WrongSignMass : Equation::PositiveMass;
  p.mu0 = spec.mu0;
  p.lambda = spec.lambda;
  return p;
}

double spatial_period(const SolutionSpec& spec) {
  const double px = spec.momentum.spatial.empty() ? 0.0 : spec.momentum.spatial[0];
  if (px == 0.0) return 0.0;
  return spec.phase_period() / std::abs(px);
}

GridState seed_from_spec(const SolutionSpec& spec, const GridSpec& grid) {
  grid.validate();
  const auto& k = spec.momentum.spatial;
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (k[i] != 0.0) {
      throw ConfigError("1+1D grid needs momentum along the first axis only");
    }
  }
  const double period = spatial_period(spec);
  if (period > 0.0) {
    const double ratio = grid.length / period;
    const double whole = std::round(ratio);
    if (whole < 1.0 || std::abs(ratio - whole) > kPeriodMatchTolerance * ratio) {
      std::ostringstream os;
      os.precision(15);
      os << "domain length " << grid.length
         << " is not a multiple of the spatial period; smallest compatible length is "
         << period;
      throw ConfigError(os.str());
    }
  }

  const double px = k.empty() ? 0.0 : k[0];
  const double e = spec.momentum.energy;
  GridState s;
  s.equation = field_params(spec).equation;
  s.phi.resize(static_cast<std::size_t>(grid.nx));
  s.pi.resize(static_cast<std::size_t>(grid.nx));
  for (int i = 0; i < grid.nx; ++i) {
    const double x = i * grid.dx();
    const double u = -px * x + spec.theta;
    s.phi[static_cast<std::size_t>(i)] = evaluate_phase(spec, u);
    s.pi[static_cast<std::size_t>(i)] = e * phase_derivative(spec, u);
  }
  return s;
}

void step_in_place(GridState& state, const GridSpec& grid, const FieldParams& params,
                   std::int64_t step_index) {
  const std::size_t n = state.phi.size();
  const double inv_dx2 = 1.0 / (grid.dx() * grid.dx());
  const double mass = params.mass_sign() * params.mu0 * params.mu0;
  const double half = 0.5 * grid.dt;
  auto& phi = state.phi;
  auto& mom = state.pi;

  auto kick = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      const double left = phi[i == 0 ? n - 1 : i - 1];
      const double right = phi[i + 1 == n ? 0 : i + 1];
      const double f = phi[i];
      const double force = (left - 2.0 * f + right) * inv_dx2 - mass * f - params.lambda * f * f * f;
      mom[i] += half * force;
    }
  };

  kick();
  for (std::size_t i = 0; i < n; ++i) phi[i] += grid.dt * mom[i];
  kick();
  state.time += grid.dt;

  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(phi[i]) || !std::isfinite(mom[i])) {
      throw DivergenceError("non-finite field value", step_index);
    }
  }
}

GridState step(const GridState& state, const GridSpec& grid, const FieldParams& params) {
  GridState next = state;
  step_in_place(next, grid, params);
  return next;
}

double energy(const GridState& state, const GridSpec& grid, const FieldParams& params) {
  const std::size_t n = state.phi.size();
  const double dx = grid.dx();
  const double mass = params.mass_sign() * params.mu0 * params.mu0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = state.phi[i];
    const double grad = (state.phi[i + 1 == n ? 0 : i + 1] - f) / dx;
    total += 0.5 * state.pi[i] * state.pi[i] + 0.5 * grad * grad + 0.5 * mass * f * f +
             0.25 * params.lambda * f * f * f * f;
  }
  return total * dx;
}

RunResult run(GridState initial, const GridSpec& grid, const FieldParams& params,
              std::int64_t steps, int sample_every) {
  grid.validate();
  if (steps < 0) throw ConfigError("step count must be >= 0");
  if (sample_every < 1) throw ConfigError("sample interval must be >= 1");

  RunResult out;
  const double e0 = energy(initial, grid, params);
  // A seed taken at a node of phi (sn at phase 0) has phi = 0 everywhere, so
  // the initial velocity also sets the scale.
  const double scale = std::max({max_abs(initial.phi), max_abs(initial.pi), 1e-300});
  const double guard = kDivergenceFactor * scale;
  out.samples.reserve(static_cast<std::size_t>(steps / sample_every + 1));
  out.samples.push_back({initial.time, initial.phi.front(), e0});

  GridState& s = initial;
  for (std::int64_t k = 1; k <= steps; ++k) {
    step_in_place(s, grid, params, k);
    if (k % sample_every == 0) {
      const double e = energy(s, grid, params);
      out.samples.push_back({s.time, s.phi.front(), e});
      if (e0 != 0.0) {
        out.max_relative_drift = std::max(out.max_relative_drift, std::abs(e - e0) / std::abs(e0));
      }
      if (max_abs(s.phi) > guard) throw DivergenceError("field exceeded divergence guard", k);
    }
  }
  out.final_state = std::move(s);
  return out;
}

double measure_frequency(std::span<const std::pair<double, double>> series) {
  const double h = sample_spacing(series);
  const std::vector<double> centred = centred_values(series);
  const std::size_t n = centred.size();

  std::size_t padded = 1;
  while (padded < 4 * n) padded <<= 1;

  std::vector<double> input(padded, 0.0);
  for (std::size_t j = 0; j < n; ++j) input[j] = centred[j] * hann(j, n);
  const std::size_t bins = padded / 2 + 1;
  auto* output = fftw_alloc_complex(bins);

  fftw_plan plan;
  {
    std::lock_guard lock(fftw_plan_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(padded), input.data(), output, FFTW_ESTIMATE);
  }
  fftw_execute(plan);

  std::vector<double> magnitude(bins);
  for (std::size_t k = 0; k < bins; ++k) magnitude[k] = std::hypot(output[k][0], output[k][1]);
  {
    std::lock_guard lock(fftw_plan_mutex());
    fftw_destroy_plan(plan);
    fftw_free(output);
  }

  const auto peak_it = std::max_element(magnitude.begin() + 1, magnitude.end() - 1);
  const auto peak = static_cast<std::size_t>(peak_it - magnitude.begin());
  if (!(*peak_it > 0.0) || !std::isfinite(*peak_it)) {
    throw AnalysisError("no dominant spectral peak");
  }

  double offset = 0.0;
  const double a = magnitude[peak - 1];
  const double b = magnitude[peak];
  const double c = magnitude[peak + 1];
  if (a > 0.0 && c > 0.0) {
    const double la = std::log(a), lb = std::log(b), lc = std::log(c);
    const double denom = la - 2.0 * lb + lc;
    if (denom < 0.0) offset = 0.5 * (la - lc) / denom;
  }
  const double omega = 2.0 * pi * (static_cast<double>(peak) + offset) /
                       (static_cast<double>(padded) * h);

  const double span_time = h * static_cast<double>(n - 1);
  if (omega * span_time / (2.0 * pi) < kMinPeriodsForFrequency) {
    throw AnalysisError("series covers fewer than 8 periods of its dominant frequency");
  }
  return omega;
}

double spectral_power(std::span<const std::pair<double, double>> series, double omega) {
  sample_spacing(series);
  const std::vector<double> centred = centred_values(series);
  const std::size_t n = centred.size();
  std::complex<double> acc = 0.0;
  const double t0 = series.front().first;
  for (std::size_t j = 0; j < n; ++j) {
    acc += centred[j] * hann(j, n) * std::polar(1.0, -omega * (series[j].first - t0));
  }
  return std::norm(acc);
}

}  // namespace quartic::sim
