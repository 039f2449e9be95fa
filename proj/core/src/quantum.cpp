#include "quartic/quantum.hpp"

#include <cmath>
#include <numbers>

#include "quartic/errors.hpp"

namespace quartic::quantum {
namespace {

using std::numbers::pi;

const elliptic::EllipticParameter kImaginaryUnitModulus{-1.0};

double k_minus_one() { return elliptic::complete_k(kImaginaryUnitModulus); }

// -N cn dn at the shifted phase, without the retarded cutoff.
double periodic_time_part(const GreenTimePart& g, double t) {
  const auto f = elliptic::jacobi(g.omega * t + g.phase_offset(), kImaginaryUnitModulus);
  return -g.normalization * f.cn * f.dn;
}

}  // namespace

GreenTimePart GreenTimePart::make(int phase_index, double mu, double lambda) {
  if (phase_index < 0) throw DomainError("phase index must be >= 0");
  if (!(mu > 0.0) || !(lambda > 0.0) || !std::isfinite(mu) || !std::isfinite(lambda)) {
    throw DomainError("Green function needs finite mu > 0 and lambda > 0");
  }
  GreenTimePart g;
  g.n = phase_index;
  g.mu = mu;
  g.lambda = lambda;
  g.normalization = 1.0 / (mu * std::pow(8.0 * lambda, 0.25));
  g.omega = std::pow(lambda / 2.0, 0.25) * mu;
  return g;
}

double GreenTimePart::phase_offset() const { return (4 * n + 1) * k_minus_one(); }

SolutionSpec GreenTimePart::background() const {
  const double rest[] = {0.0};
  return make_massless(lambda, mu, phase_offset(), Sign::Plus, rest);
}

double green_time_part(const GreenTimePart& g, double t) {
  if (t < 0.0) return 0.0;
  return periodic_time_part(g, t);
}

double green_time_derivative(const GreenTimePart& g, double t) {
  if (t < 0.0) return 0.0;
  const auto f = elliptic::jacobi(g.omega * t + g.phase_offset(), kImaginaryUnitModulus);
  return -g.normalization * g.omega * elliptic::cn_dn_first_derivative(f, kImaginaryUnitModulus);
}

double greens_equation_residual(const GreenTimePart& g, double t) {
  const auto f = elliptic::jacobi(g.omega * t + g.phase_offset(), kImaginaryUnitModulus);
  const double value = -g.normalization * f.cn * f.dn;
  const double second = -g.normalization * g.omega * g.omega *
                        elliptic::cn_dn_second_derivative(f, kImaginaryUnitModulus);

  const SolutionSpec bg = g.background();
  const double phi = evaluate_phase(bg, bg.momentum.energy * t + bg.theta);
  return second + 3.0 * g.lambda * phi * phi * value;
}

double green_derivative_identity(const GreenTimePart& g, double t) {
  const SolutionSpec bg = g.background();
  const double u = bg.momentum.energy * t;
  const double rhs = -phase_derivative(bg, u + bg.theta) / (2.0 * g.mu * g.mu);
  return green_time_part(g, t) - rhs;
}

GreenSpectrum green_spectrum(const GreenTimePart& g, int n_max) {
  if (n_max < 0) throw DomainError("green_spectrum needs n_max >= 0");

  GreenSpectrum out;
  out.phase_index = g.n;
  const double e0 = analysis::massless_level(0, g.lambda, g.mu);
  const double period = 2.0 * pi / e0;
  for (int n = 0; n <= n_max; ++n) {
    const double e = analysis::massless_level(n, g.lambda, g.mu);
    const double a = 2.0 * analysis::periodic_average(
                               [&](double t) { return periodic_time_part(g, t) * std::cos(e * t); },
                               period);
    const double b = 2.0 * analysis::periodic_average(
                               [&](double t) { return periodic_time_part(g, t) * std::sin(e * t); },
                               period);
    out.lines.push_back({n, e, std::hypot(a, b)});
    out.phases.push_back(std::atan2(-b, a));
  }
  return out;
}

double zero_mode_residual(const SolutionSpec& spec, double t, double chi_scale) {
  if (spec.family != Family::Massless) {
    throw DomainError("zero mode is defined for the massless family only");
  }
  const double e = spec.rest_energy();
  const double u = e * t + spec.theta;
  const auto f = elliptic::jacobi(u, spec.parameter);
  const double m = spec.parameter.value();
  const double a = sign_factor(spec.sign) * spec.amplitude;

  const double phi = a * f.sn;
  const double chi = chi_scale * e * a * f.cn * f.dn;
  const double third = a * (-(1.0 + m) + 6.0 * m * f.sn * f.sn) * f.cn * f.dn;
  const double chi_second = chi_scale * e * e * e * third;
  return chi_second + 3.0 * spec.lambda * phi * phi * chi;
}

double zero_mode_scale(const SolutionSpec& spec) {
  const double a = spec.amplitude;
  return spec.lambda * a * a * a * spec.rest_energy();
}

}  // namespace quartic::quantum
