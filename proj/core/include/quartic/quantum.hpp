#pragma once

// First-order Green function of the massless quartic theory around the exact
// solution with phase theta_n = (4n+1) K(-1). In the rest frame the
// propagator factorises as -delta^{D-1}(x) T(t); only T is numeric here, the
// spatial delta is carried symbolically (see GreenSpectrum::spatial_delta).
//
//   T(t) = -N cn(w t + theta_n | -1) dn(w t + theta_n | -1),  t > 0
//   T(t) = 0,                                                t < 0
//   N = 1 / (mu (8 lambda)^{1/4}),  w = (lambda/2)^{1/4} mu
//
// T solves T'' + 3 lambda phi_c^2 T = 0 for t > 0 with T(0) = 0 and
// T'(0+) = 1, the unit jump forced by the delta source of the linearised
// operator with the (-d_t^2 + Laplacian) signature.

#include <vector>

#include "quartic/analysis.hpp"
#include "quartic/solutions.hpp"

namespace quartic::quantum {

struct GreenTimePart {
  int n = 0;  // phase-family index
  double mu = 1.0;
  double lambda = 2.0;
  double normalization = 0.0;
  double omega = 0.0;

  /// Fills normalization and omega from (mu, lambda).
  static GreenTimePart make(int phase_index, double mu, double lambda);

  /// theta_n = (4n+1) K(-1)
  double phase_offset() const;

  /// The classical massless solution (rest frame) this propagator is built
  /// around, carrying phase theta_n.
  SolutionSpec background() const;
};

double green_time_part(const GreenTimePart& g, double t);

/// T'(t) for t > 0 from the analytic derivative of cn dn.
double green_time_derivative(const GreenTimePart& g, double t);

/// T''(t) + 3 lambda phi_c(t)^2 T(t); phi_c from (mu, lambda) directly, so a
/// corrupted omega or normalization in `g` is exposed. t > 0.
double greens_equation_residual(const GreenTimePart& g, double t);

/// T(t) - [-(1/(2 mu^2)) d phi_c / du] at u = w t, where phi_c(u) is the
/// background as a function of its phase argument (phase theta_n included).
double green_derivative_identity(const GreenTimePart& g, double t);

struct GreenSpectrum {
  std::vector<analysis::SpectrumLine> lines;  // amplitude = |B_n|
  std::vector<double> phases;                 // T ~ sum |B_n| cos(eps_n t + phase_n)
  int phase_index = 0;
  bool spatial_delta = true;                  // factor -delta^{D-1}(x) theta(t)
};

/// Energies from analysis::massless_level; amplitudes and phases by
/// projecting the periodic continuation of T over one period.
GreenSpectrum green_spectrum(const GreenTimePart& g, int n_max);

/// chi'' + 3 lambda phi_c^2 chi for chi = d phi_c / dt in the rest frame
/// (the epsilon = 0 eigenmode), with chi multiplied by `chi_scale`. Massless
/// specs only.
double zero_mode_residual(const SolutionSpec& spec, double t, double chi_scale = 1.0);

/// Normalisation for zero-mode residuals: lambda A^3 E_rest.
double zero_mode_scale(const SolutionSpec& spec);

}  // namespace quartic::quantum
