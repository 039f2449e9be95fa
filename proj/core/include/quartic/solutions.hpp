#pragma once

// Exact plane-wave solutions of the quartic scalar field equations
//
//   (d_t^2 - Laplacian) phi + mu0^2 phi + lambda phi^3 = 0   (Massive, Massless)
//   (d_t^2 - Laplacian) phi - mu0^2 phi + lambda phi^3 = 0   (SSB)
//
// in D spacetime dimensions. Every solution depends on spacetime only
// through the phase u = p.x + theta with p.x = E t - p.x (mostly-minus
// contraction), so p^2 = E^2 - |p|^2 is the invariant fixed by each
// family's dispersion relation.

#include <span>
#include <string_view>
#include <vector>

#include "quartic/elliptic.hpp"

namespace quartic {

enum class Family { Massive, Massless, Ssb };
enum class Sign { Plus, Minus };

std::string_view to_string(Family family);
std::string_view to_string(Sign sign);
Family family_from_string(std::string_view name);
Sign sign_from_string(std::string_view name);

inline double sign_factor(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

struct Momentum {
  double energy = 0.0;
  std::vector<double> spatial;  // length dimension - 1
  int dimension = 2;

  /// E^2 - |p|^2
  double minkowski_square() const;

  /// E t - p.x; x must have length dimension - 1.
  double contract(double t, std::span<const double> x) const;
};

struct SolutionSpec {
  Family family = Family::Massless;
  double mu0 = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  double theta = 0.0;
  Sign sign = Sign::Plus;
  Momentum momentum;
  double amplitude = 0.0;
  elliptic::EllipticParameter parameter;

  /// Real period of the profile in the phase variable: 4K for sn, 2K for dn.
  double phase_period() const;

  /// sqrt(p^2): the oscillation energy in the rest frame.
  double rest_energy() const;

  /// SSB only: the equilibrium reference +-sqrt(3/2) v, sign following the
  /// solution's sign. Zero for the other families.
  double vacuum_reference() const;
};

/// Right-hand side of the family's dispersion relation p^2 = rhs, evaluated
/// from the constants in the printed form (used as the closure check).
double dispersion_rhs(Family family, double mu0, double lambda, double mu);

/// mu0 > 0, lambda >= 0 (lambda = 0 is the free plane-wave limit), mu > 0.
SolutionSpec make_massive(double mu0, double lambda, double mu, double theta,
                          Sign sign, std::span<const double> spatial);

SolutionSpec make_massless(double lambda, double mu, double theta, Sign sign,
                           std::span<const double> spatial);

SolutionSpec make_ssb(double mu0, double lambda, double theta, Sign sign,
                      std::span<const double> spatial);

/// phi(t, x).
double evaluate(const SolutionSpec& spec, double t, std::span<const double> x);

/// phi as a function of the phase u: +-A sn(u|m) or +-v dn(u|m).
double evaluate_phase(const SolutionSpec& spec, double u);

/// d phi / du
double phase_derivative(const SolutionSpec& spec, double u);

/// d^2 phi / du^2, from the closed-form second-derivative identities.
double phase_second_derivative(const SolutionSpec& spec, double u);

/// sqrt(mu0^2 + lambda mu^4 / (mu0^2 + sqrt(mu0^4 + 2 lambda mu^4))).
double renormalized_mass(double mu0, double mu, double lambda);

}  // namespace quartic
