#pragma once

// Explicit 1+1D integrator for
//   d_t^2 phi = d_x^2 phi - s mu0^2 phi - lambda phi^3,   s = +1 or -1 (SSB),
// on a periodic grid. Kick-drift-kick leapfrog with the 3-point Laplacian;
// symplectic, time reversible, second order in dt and dx. The closed-form
// solutions are used only to build initial data, never during evolution.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "quartic/solutions.hpp"

namespace quartic::sim {

inline constexpr double kMaxCfl = 0.9;
inline constexpr double kDivergenceFactor = 1e6;

struct GridSpec {
  int nx = 1024;
  double length = 1.0;
  double dt = 0.0;

  double dx() const { return length / nx; }
  double cfl() const { return dt * nx / length; }

  /// Throws ConfigError unless nx is a power of two >= 4, length > 0 and
  /// 0 < |cfl| <= kMaxCfl.
  void validate() const;

  static GridSpec from_cfl(int nx, double length, double cfl);
};

/// Which field equation is evolved: s = +1 (Massive, Massless) or -1 (SSB).
enum class Equation { PositiveMass, WrongSignMass };

struct FieldParams {
  Equation equation = Equation::PositiveMass;
  double mu0 = 0.0;
  double lambda = 0.0;

  double mass_sign() const { return equation == Equation::WrongSignMass ? -1.0 : 1.0; }
};

FieldParams field_params(const SolutionSpec& spec);

struct GridState {
  std::vector<double> phi;
  std::vector<double> pi;  // d_t phi
  double time = 0.0;
  Equation equation = Equation::PositiveMass;
};

/// Smallest periodic domain length compatible with `spec` along x, i.e. the
/// spatial period phase_period / |p_x|; 0 for a rest-frame spec (any length
/// works).
double spatial_period(const SolutionSpec& spec);

/// phi_i = phi(0, x_i), pi_i = d_t phi(0, x_i) with x_i = i dx. Only the first
/// spatial momentum component may be non-zero, and grid.length must be an
/// integer multiple of spatial_period(spec).
GridState seed_from_spec(const SolutionSpec& spec, const GridSpec& grid);

/// One kick-drift-kick step of size grid.dt. Throws DivergenceError on
/// non-finite values.
GridState step(const GridState& state, const GridSpec& grid, const FieldParams& params);

/// In-place variant used by the run loop; `step_index` is reported on
/// divergence.
void step_in_place(GridState& state, const GridSpec& grid, const FieldParams& params,
                   std::int64_t step_index = 0);

/// Discrete conserved energy
///   sum_i dx [pi^2/2 + ((phi_{i+1}-phi_i)/dx)^2/2 + s mu0^2 phi^2/2 + lambda phi^4/4].
double energy(const GridState& state, const GridSpec& grid, const FieldParams& params);

struct Sample {
  double time = 0.0;
  double probe = 0.0;  // phi at x = 0
  double energy = 0.0;
};

struct RunResult {
  std::vector<Sample> samples;
  GridState final_state;
  double max_relative_drift = 0.0;
};

/// Advances `steps` steps, recording a sample every `sample_every` steps
/// (plus the initial state), so the samples stay uniform. Aborts with DivergenceError when max |phi|
/// exceeds kDivergenceFactor times the initial max(|phi|, |pi|).
RunResult run(GridState initial, const GridSpec& grid, const FieldParams& params,
              std::int64_t steps, int sample_every);

/// Dominant angular frequency of a uniformly sampled real series: Hann
/// window, zero-padded FFT, quadratic interpolation of the log-magnitude
/// peak. Throws AnalysisError when no peak exists or fewer than 8 periods
/// are covered.
double measure_frequency(std::span<const std::pair<double, double>> series);

/// Hann-windowed power of the series at angular frequency `omega`
/// (direct DTFT), used for harmonic-content ratios.
double spectral_power(std::span<const std::pair<double, double>> series, double omega);

}  // namespace quartic::sim
