#include "verify.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <string>

#include "quartic/analysis.hpp"
#include "quartic/errors.hpp"
#include "quartic/quantum.hpp"

namespace quartic::cli {
namespace {

constexpr double kResidualTolerance = 1e-9;
constexpr double kPartialSumTolerance = 1e-7;
constexpr double kJumpTolerance = 1e-8;
constexpr double kGreenEquationTolerance = 1e-10;
constexpr double kOdeTolerance = 1e-7;
constexpr double kIdentityTolerance = 1e-10;
constexpr double kPhaseFamilyTolerance = 1e-12;
constexpr double kZeroModeTolerance = 1e-9;

double k_minus_one() { return elliptic::complete_k(elliptic::EllipticParameter(-1.0)); }

void corrupt(SolutionSpec& s, const std::optional<Corruption>& c) {
  if (!c) return;
  if (c->field == "energy") s.momentum.energy *= c->factor;
  if (c->field == "amplitude") s.amplitude *= c->factor;
}

void corrupt(quantum::GreenTimePart& g, const std::optional<Corruption>& c) {
  if (!c) return;
  if (c->field == "energy") g.omega *= c->factor;
  if (c->field == "amplitude") g.normalization *= c->factor;
}

double partial_sum_deviation(const SolutionSpec& s) {
  const auto series = analysis::fourier_series(s, 8);
  const double period = s.phase_period();
  double worst = 0.0;
  for (int j = 0; j < 512; ++j) {
    const double u = period * j / 512.0;
    worst = std::max(worst, std::abs(analysis::partial_sum(series, u) - evaluate_phase(s, u)));
  }
  return worst / s.amplitude;
}

// T from direct integration of phi'' = -lambda phi^3 and
// T'' = -3 lambda phi^2 T starting at the turning point phi = A, against
// the closed form over three periods.
double ode_deviation(const quantum::GreenTimePart& g, double lambda, double mu) {
  namespace ode = boost::numeric::odeint;
  using State = std::array<double, 4>;
  const double amplitude = mu * std::pow(2.0 / lambda, 0.25);
  const double period = 4.0 * k_minus_one() / (std::pow(lambda / 2.0, 0.25) * mu);
  auto rhs = [lambda](const State& s, State& d, double) {
    d[0] = s[1];
    d[1] = -lambda * s[0] * s[0] * s[0];
    d[2] = s[3];
    d[3] = -3.0 * lambda * s[0] * s[0] * s[2];
  };
  State state{amplitude, 0.0, 0.0, 1.0};
  double t = 0.0;
  double worst = 0.0;
  auto stepper = ode::make_controlled(1e-14, 1e-14, ode::runge_kutta_fehlberg78<State>());
  for (int j = 1; j <= 60; ++j) {
    const double next = 3.0 * period * j / 60.0;
    ode::integrate_adaptive(stepper, rhs, state, t, next, 1e-3);
    t = next;
    worst = std::max(worst, std::abs(state[2] - quantum::green_time_part(g, t)));
  }
  return worst;
}

}  // namespace

Corruption parse_corruption(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("--corrupt expects field:factor, e.g. energy:1.01");
  }
  Corruption c;
  c.field = text.substr(0, colon);
  if (c.field != "energy" && c.field != "amplitude") {
    throw ConfigError("--corrupt field must be energy or amplitude, got '" + c.field + "'");
  }
  const std::string factor = text.substr(colon + 1);
  std::size_t used = 0;
  try {
    c.factor = std::stod(factor, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != factor.size() || !std::isfinite(c.factor)) {
    throw ConfigError("--corrupt factor is not a number: '" + factor + "'");
  }
  return c;
}

SolutionSpec sweep_spec(Family family, double lambda, double scale,
                        const std::vector<double>& spatial) {
  switch (family) {
    case Family::Massive: return make_massive(scale, lambda, scale, 0.0, Sign::Plus, spatial);
    case Family::Massless: return make_massless(lambda, scale, 0.0, Sign::Plus, spatial);
    case Family::Ssb: return make_ssb(scale, lambda, 0.0, Sign::Plus, spatial);
  }
  throw DomainError("unknown family");
}

std::vector<CheckResult> run_checks(const VerifyPlan& plan) {
  auto wants = [&](const char* name) {
    return std::find(plan.checks.begin(), plan.checks.end(), name) != plan.checks.end();
  };
  std::vector<CheckResult> out;

  for (Family family : plan.families) {
    for (double lambda : plan.lambdas) {
      for (double scale : plan.scales) {
        SolutionSpec s = sweep_spec(family, lambda, scale, plan.spatial);
        corrupt(s, plan.corruption);
        const std::string fam(to_string(family));
        auto record = [&](const char* name, double measured, double tol, int phase = -1) {
          out.push_back({name, fam, lambda, scale, phase, measured, tol});
        };

        if (wants("residual")) {
          record("residual", analysis::residual_max(s, 256) / analysis::residual_scale(s),
                 kResidualTolerance);
        }
        if (wants("fourier")) {
          record("fourier-partial-sum", partial_sum_deviation(s), kPartialSumTolerance);
        }
        if (family != Family::Massless) continue;

        if (wants("zero-mode")) {
          const double period = s.phase_period() / s.rest_energy();
          double worst = 0.0;
          for (int j = 0; j < 256; ++j) {
            worst = std::max(worst, std::abs(quantum::zero_mode_residual(s, period * j / 256.0)));
          }
          record("zero-mode", worst / quantum::zero_mode_scale(s), kZeroModeTolerance);
        }
        if (!wants("green")) continue;

        const double mu = scale;
        auto g0 = quantum::GreenTimePart::make(0, mu, lambda);
        corrupt(g0, plan.corruption);
        const double period = 4.0 * k_minus_one() / g0.omega;
        for (int n : {0, 1, 5}) {
          auto g = quantum::GreenTimePart::make(n, mu, lambda);
          corrupt(g, plan.corruption);

          const double h = 1e-5;
          const double slope =
              (quantum::green_time_part(g, h) - quantum::green_time_part(g, 0.0)) / h;
          record("green-jump",
                 std::max(std::abs(quantum::green_time_part(g, 0.0)), std::abs(slope - 1.0)),
                 kJumpTolerance, n);

          double eq = 0.0, identity = 0.0, family_gap = 0.0;
          for (int j = 1; j <= 300; ++j) {
            const double t = 3.0 * period * j / 300.0;
            eq = std::max(eq, std::abs(quantum::greens_equation_residual(g, t)));
            identity = std::max(identity, std::abs(quantum::green_derivative_identity(g, t)));
            family_gap = std::max(family_gap, std::abs(quantum::green_time_part(g, t) -
                                                       quantum::green_time_part(g0, t)));
          }
          record("green-equation", eq, kGreenEquationTolerance, n);
          record("green-identity", identity, kIdentityTolerance, n);
          record("green-phase-family", family_gap / g0.normalization, kPhaseFamilyTolerance, n);
        }
        record("green-ode", ode_deviation(g0, lambda, mu), kOdeTolerance, 0);
      }
    }
  }
  return out;
}

}  // namespace quartic::cli
