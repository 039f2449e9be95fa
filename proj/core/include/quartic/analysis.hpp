#pragma once

#include <functional>
#include <span>
#include <vector>

#include "quartic/solutions.hpp"

namespace quartic::analysis {

/// Pointwise residual of the field equation for `spec`:
///   p^2 f''(u) +- mu0^2 f(u) + lambda f(u)^3,
/// with p^2 taken from the stored momentum and f'' from the closed-form
/// second-derivative identities. Exact solutions give rounding-level values.
double residual(const SolutionSpec& spec, double t, std::span<const double> x);

/// Max |residual| over `samples` points: half along the time axis at x = 0,
/// half along a boosted line x = 0.6 t e_1, each covering one full period of
/// the phase. samples >= 8.
double residual_max(const SolutionSpec& spec, int samples);

/// Normalisation for residuals: lambda A^3, or p^2 A in the free limit.
double residual_scale(const SolutionSpec& spec);

enum class SeriesKind { Sn, Dn };

/// Truncated Fourier expansion of a solution profile in its phase u.
///   Sn:  f(u) ~ sum_{n=0}^{N-1} c_n sin((2n+1) w u),     w = pi / (2K)
///   Dn:  f(u) ~ c_0' + sum_{n=1}^{N} c_n cos(n w u),     w = pi / K
/// For Dn, coefficients[n-1] holds the harmonic n and constant_term the mean.
struct FourierSeries {
  SeriesKind kind = SeriesKind::Sn;
  double fundamental = 0.0;
  std::vector<double> coefficients;
  double constant_term = 0.0;
  int truncation = 0;

  /// Integer harmonic multiplying `fundamental` for coefficients[i].
  int harmonic(std::size_t i) const;
};

/// Mean of a periodic function over one period by the trapezoid rule,
/// starting at 4096 nodes and doubling until two successive estimates agree
/// to 1e-10 (relative to max(1, |mean|)).
double periodic_average(const std::function<double(double)>& f, double period);

/// Coefficients by numerical projection onto the harmonics over one exact
/// period (trapezoid rule, spectrally accurate for these analytic profiles).
FourierSeries fourier_series(const SolutionSpec& spec, int terms);

double partial_sum(const FourierSeries& series, double u);

/// Printed coefficient of the massless sn series (amplitude included),
/// with decaying exponent:
///   A (2 pi / K(-1)) (-1)^n e^{-(n+1/2) pi} / (1 + e^{-(2n+1) pi}).
double massless_closed_form_coefficient(const SolutionSpec& spec, int n);

/// Printed coefficient of the SSB dn series (v included), n >= 1, with
/// alternating sign: v (2 pi / K(-1)) (-1)^n e^{-n pi} / (1 + e^{-2 n pi}).
/// n = 0 gives the constant v pi / (2 K(-1)).
double ssb_closed_form_coefficient(const SolutionSpec& spec, int n);

struct SpectrumLine {
  int n = 0;
  double energy = 0.0;
  double amplitude = 0.0;
};

/// eps_n = (2n+1) (pi / (2 K(-1))) (lambda/2)^{1/4} mu. Shared by the
/// classical and Green-function spectra.
double massless_level(int n, double lambda, double mu);

/// Massive: (2n+1) pi/(2K(m)) M_ren; Massless: massless_level;
/// SSB: n (pi/K(-1)) mu0/sqrt(3), n from 0. Amplitudes are the magnitudes of
/// the matching Fourier coefficients (constant term for SSB n = 0).
std::vector<SpectrumLine> mass_spectrum(const SolutionSpec& spec, int n_max);

}  // namespace quartic::analysis
