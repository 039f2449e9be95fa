#include "quartic/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quartic/errors.hpp"

namespace quartic {
namespace {

constexpr double kClosureTolerance = 1e-12;

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void require_finite_positive(double value, const char* name) {
  require(std::isfinite(value) && value > 0.0,
          std::string(name) + " must be finite and > 0, got " +
              std::to_string(value));
}

Momentum solve_momentum(double p_squared, std::span<const double> spatial) {
  for (double k : spatial) require(std::isfinite(k), "non-finite momentum component");
  const double k2 =
      std::inner_product(spatial.begin(), spatial.end(), spatial.begin(), 0.0);
  Momentum p;
  p.spatial.assign(spatial.begin(), spatial.end());
  p.dimension = static_cast<int>(spatial.size()) + 1;
  p.energy = std::sqrt(p_squared + k2);
  if (!std::isfinite(p.energy) || !(p.energy > 0.0)) {
    throw std::logic_error("no real positive energy root of the dispersion relation");
  }
  return p;
}

void check_closure(const SolutionSpec& s) {
  const double rhs = dispersion_rhs(s.family, s.mu0, s.lambda, s.mu);
  const double lhs = s.momentum.minkowski_square();
  // E^2 - |p|^2 cancels when the spatial momentum dominates, so the
  // tolerance is relative to E^2.
  const double e2 = s.momentum.energy * s.momentum.energy;
  if (std::abs(lhs - rhs) > kClosureTolerance * std::max(std::abs(rhs), e2)) {
    throw std::logic_error("dispersion relation not closed for constructed solution");
  }
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Massive: return "massive";
    case Family::Massless: return "massless";
    case Family::Ssb: return "ssb";
  }
  return "unknown";
}

std::string_view to_string(Sign sign) {
  return sign == Sign::Plus ? "plus" : "minus";
}

Family family_from_string(std::string_view name) {
  if (name == "massive") return Family::Massive;
  if (name == "massless") return Family::Massless;
  if (name == "ssb") return Family::Ssb;
  throw DomainError("unknown solution family '" + std::string(name) + "'");
}

Sign sign_from_string(std::string_view name) {
  if (name == "plus" || name == "+") return Sign::Plus;
  if (name == "minus" || name == "-") return Sign::Minus;
  throw DomainError("unknown sign '" + std::string(name) + "'");
}

double Momentum::minkowski_square() const {
  double k2 = 0.0;
  for (double k : spatial) k2 += k * k;
  return energy * energy - k2;
}

double Momentum::contract(double t, std::span<const double> x) const {
  if (x.size() != spatial.size()) {
    throw DomainError("position has " + std::to_string(x.size()) +
                      " components, expected " + std::to_string(spatial.size()));
  }
  double px = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) px += spatial[i] * x[i];
  return energy * t - px;
}

double SolutionSpec::phase_period() const {
  const double k = elliptic::complete_k(parameter);
  return family == Family::Ssb ? 2.0 * k : 4.0 * k;
}

double SolutionSpec::rest_energy() const {
  return std::sqrt(momentum.minkowski_square());
}

double SolutionSpec::vacuum_reference() const {
  if (family != Family::Ssb) return 0.0;
  return sign_factor(sign) * std::sqrt(1.5) * amplitude;
}

double dispersion_rhs(Family family, double mu0, double lambda, double mu) {
  switch (family) {
    case Family::Massive: {
      const double s = std::sqrt(mu0 * mu0 * mu0 * mu0 + 2.0 * lambda * mu * mu * mu * mu);
      return mu0 * mu0 + lambda * mu * mu * mu * mu / (mu0 * mu0 + s);
    }
    case Family::Massless:
      return mu * mu * std::sqrt(lambda / 2.0);
    case Family::Ssb: {
      const double v2 = 2.0 * mu0 * mu0 / (3.0 * lambda);
      return lambda * v2 / 2.0;
    }
  }
  return 0.0;
}

SolutionSpec make_massive(double mu0, double lambda, double mu, double theta,
                          Sign sign, std::span<const double> spatial) {
  require_finite_positive(mu0, "mu0");
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be finite and >= 0");
  require_finite_positive(mu, "mu");
  require(std::isfinite(theta), "theta must be finite");

  const double mu0_2 = mu0 * mu0;
  const double mu4 = mu * mu * mu * mu;
  const double root = std::sqrt(mu0_2 * mu0_2 + 2.0 * lambda * mu4);
  const double denom = mu0_2 + root;

  SolutionSpec s;
  s.family = Family::Massive;
  s.mu0 = mu0;
  s.lambda = lambda;
  s.mu = mu;
  s.theta = theta;
  s.sign = sign;
  s.amplitude = std::sqrt(2.0 * mu4 / denom);
  // (-mu0^2 + root) / (-mu0^2 - root), with the numerator rationalised so the
  // small-lambda limit keeps full precision.
  s.parameter = elliptic::EllipticParameter(-2.0 * lambda * mu4 / (denom * denom));
  s.momentum = solve_momentum(0.5 * denom, spatial);
  check_closure(s);
  return s;
}

SolutionSpec make_massless(double lambda, double mu, double theta, Sign sign,
                           std::span<const double> spatial) {
  require_finite_positive(lambda, "lambda");
  require_finite_positive(mu, "mu");
  require(std::isfinite(theta), "theta must be finite");

  SolutionSpec s;
  s.family = Family::Massless;
  s.lambda = lambda;
  s.mu = mu;
  s.theta = theta;
  s.sign = sign;
  s.amplitude = mu * std::pow(2.0 / lambda, 0.25);
  s.parameter = elliptic::EllipticParameter(-1.0);
  s.momentum = solve_momentum(mu * mu * std::sqrt(lambda / 2.0), spatial);
  check_closure(s);
  return s;
}

SolutionSpec make_ssb(double mu0, double lambda, double theta, Sign sign,
                      std::span<const double> spatial) {
  require_finite_positive(mu0, "mu0");
  require_finite_positive(lambda, "lambda");
  require(std::isfinite(theta), "theta must be finite");

  SolutionSpec s;
  s.family = Family::Ssb;
  s.mu0 = mu0;
  s.lambda = lambda;
  s.theta = theta;
  s.sign = sign;
  s.amplitude = std::sqrt(2.0 * mu0 * mu0 / (3.0 * lambda));
  s.parameter = elliptic::EllipticParameter(-1.0);
  s.momentum = solve_momentum(mu0 * mu0 / 3.0, spatial);
  check_closure(s);
  return s;
}

double evaluate(const SolutionSpec& spec, double t, std::span<const double> x) {
  return evaluate_phase(spec, spec.momentum.contract(t, x) + spec.theta);
}

double evaluate_phase(const SolutionSpec& spec, double u) {
  const auto f = elliptic::jacobi(u, spec.parameter);
  const double a = sign_factor(spec.sign) * spec.amplitude;
  return spec.family == Family::Ssb ? a * f.dn : a * f.sn;
}

double phase_derivative(const SolutionSpec& spec, double u) {
  const auto d = elliptic::jacobi_derivatives(u, spec.parameter);
  const double a = sign_factor(spec.sign) * spec.amplitude;
  return spec.family == Family::Ssb ? a * d.dn : a * d.sn;
}

double phase_second_derivative(const SolutionSpec& spec, double u) {
  const auto f = elliptic::jacobi(u, spec.parameter);
  const double a = sign_factor(spec.sign) * spec.amplitude;
  return spec.family == Family::Ssb
             ? a * elliptic::dn_second_derivative(f, spec.parameter)
             : a * elliptic::sn_second_derivative(f, spec.parameter);
}

double renormalized_mass(double mu0, double mu, double lambda) {
  require(std::isfinite(mu0) && std::isfinite(mu) && std::isfinite(lambda),
          "renormalized mass needs finite inputs");
  require(mu0 >= 0.0 && mu >= 0.0 && lambda >= 0.0,
          "renormalized mass needs non-negative inputs");
  require(mu0 > 0.0 || mu > 0.0, "renormalized mass undefined for mu0 = mu = 0");
  // mu0^2 + lambda mu^4 / (mu0^2 + S) == (mu0^2 + S) / 2, which stays finite
  // when mu0 = 0 and lambda = 0 simultaneously.
  const double mu0_2 = mu0 * mu0;
  const double root = std::sqrt(mu0_2 * mu0_2 + 2.0 * lambda * mu * mu * mu * mu);
  return std::sqrt(0.5 * (mu0_2 + root));
}

}  // namespace quartic
