#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "quartic/analysis.hpp"
#include "quartic/errors.hpp"
#include "quartic/quantum.hpp"

using namespace quartic;
using namespace quartic::quantum;
using std::numbers::pi;

namespace {

double k_minus_one() { return elliptic::complete_k(elliptic::EllipticParameter(-1.0)); }

double period_of(const GreenTimePart& g) { return 4.0 * k_minus_one() / g.omega; }

}  // namespace

TEST(GreenTimePart, ConstructionAndPhase) {
  const auto g = GreenTimePart::make(3, 1.0, 2.0);
  EXPECT_NEAR(g.normalization, 1.0 / std::pow(16.0, 0.25), 1e-15);
  EXPECT_NEAR(g.omega, 1.0, 1e-15);
  EXPECT_EQ(g.phase_offset(), 13 * k_minus_one());
  EXPECT_THROW(GreenTimePart::make(-1, 1.0, 2.0), DomainError);
  EXPECT_THROW(GreenTimePart::make(0, 0.0, 2.0), DomainError);
  EXPECT_THROW(GreenTimePart::make(0, 1.0, -2.0), DomainError);
}

TEST(GreenTimePart, RetardedAndVanishingAtOrigin) {
  const auto g = GreenTimePart::make(0, 1.0, 2.0);
  EXPECT_EQ(green_time_part(g, -0.5), 0.0);
  EXPECT_EQ(green_time_part(g, -1e-9), 0.0);
  EXPECT_LE(std::abs(green_time_part(g, 0.0)), 1e-15);
  EXPECT_LE(std::abs(green_time_part(g, 2.0 * k_minus_one() / g.omega)), 1e-14);
}

TEST(GreenTimePart, UnitJumpAcrossParameterSweep) {
  for (double lambda : {0.5, 2.0, 10.0}) {
    for (double mu : {0.5, 1.0, 2.0}) {
      for (int n : {0, 1, 5}) {
        const auto g = GreenTimePart::make(n, mu, lambda);
        EXPECT_LE(std::abs(green_time_part(g, 0.0)), 1e-14);
        // T''(0) = 0, so the forward difference error is O(h^2).
        const double h = 1e-5;
        const double slope = (green_time_part(g, h) - green_time_part(g, 0.0)) / h;
        EXPECT_NEAR(slope, 1.0, 1e-8) << lambda << " " << mu << " " << n;
        EXPECT_NEAR(green_time_derivative(g, 0.0), 1.0, 1e-12);
      }
    }
  }
}

TEST(GreensEquation, ResidualAtRoundingLevel) {
  for (double lambda : {0.5, 2.0, 10.0}) {
    for (double mu : {0.5, 1.0, 2.0}) {
      const auto g = GreenTimePart::make(0, mu, lambda);
      const double period = period_of(g);
      for (int j = 1; j <= 300; ++j) {
        EXPECT_LE(std::abs(greens_equation_residual(g, 3 * period * j / 300.0)), 1e-10);
      }
    }
  }
}

TEST(GreensEquation, CorruptedFrequencyIsDetectedNormalizationIsNot) {
  auto g = GreenTimePart::make(0, 1.0, 2.0);
  g.omega *= 1.01;
  double worst = 0.0;
  for (int j = 1; j <= 256; ++j) {
    worst = std::max(worst, std::abs(greens_equation_residual(g, period_of(g) * j / 256.0)));
  }
  EXPECT_GT(worst, 1e-3);

  auto h = GreenTimePart::make(0, 1.0, 2.0);
  h.normalization *= 1.01;
  for (int j = 1; j <= 64; ++j) {
    EXPECT_LE(std::abs(greens_equation_residual(h, period_of(h) * j / 64.0)), 1e-10);
  }
  EXPECT_GT(std::abs(green_time_derivative(h, 0.0) - 1.0), 5e-3);
}

TEST(GreensEquation, IndependentOdeIntegrationReproducesT) {
  // phi'' = -lambda phi^3 from the turning point (A, 0), alongside
  // T'' = -3 lambda phi^2 T from (0, 1).
  for (double lambda : {0.5, 2.0, 10.0}) {
    const double mu = 1.3;
    const auto g = GreenTimePart::make(0, mu, lambda);
    const double amplitude = mu * std::pow(2.0 / lambda, 0.25);
    const double period = period_of(g);
    oracle::State4 state{amplitude, 0.0, 0.0, 1.0};
    double t = 0.0;
    double worst = 0.0;
    for (int j = 1; j <= 60; ++j) {
      const double next = 3 * period * j / 60.0;
      state = oracle::integrate_pair(
          state, next - t, [&](double y) { return -lambda * y * y * y; },
          [&](double y) { return -3.0 * lambda * y * y; });
      t = next;
      worst = std::max(worst, std::abs(state[2] - green_time_part(g, t)));
    }
    EXPECT_LE(worst, 1e-7) << lambda;
  }
}

TEST(GreenDerivativeIdentity, HoldsOverAPeriod) {
  for (int n : {0, 3}) {
    for (double lambda : {2.0, 0.7}) {
      const auto g = GreenTimePart::make(n, 1.4, lambda);
      const double period = period_of(g);
      for (int j = 0; j <= 200; ++j) {
        EXPECT_LE(std::abs(green_derivative_identity(g, period * j / 200.0)), 1e-10);
      }
    }
  }
  EXPECT_EQ(green_derivative_identity(GreenTimePart::make(0, 1.0, 2.0), 0.0), 0.0);
}

TEST(GreenDerivativeIdentity, FiniteDifferenceOfBackground) {
  const auto g = GreenTimePart::make(0, 1.0, 2.0);
  const auto bg = g.background();
  const double h = 1e-5;
  for (double t = 0.1; t < 5.0; t += 0.3) {
    const double u = g.omega * t + bg.theta;
    const double fd = (evaluate_phase(bg, u + h) - evaluate_phase(bg, u - h)) / (2 * h);
    EXPECT_NEAR(green_time_part(g, t), -fd / 2.0, 1e-9);
  }
}

TEST(GreenTimePart, PhaseFamilyMembersCoincide) {
  const auto g0 = GreenTimePart::make(0, 0.8, 3.0);
  for (int n : {1, 5}) {
    const auto gn = GreenTimePart::make(n, 0.8, 3.0);
    for (double t = 0.0; t < 20.0; t += 0.097) {
      EXPECT_NEAR(green_time_part(gn, t), green_time_part(g0, t), 1e-12 * g0.normalization);
    }
  }
}

TEST(GreenTimePart, PeriodicityAndSymmetry) {
  const auto g = GreenTimePart::make(0, 1.2, 1.5);
  const double quarter = k_minus_one() / g.omega;
  for (double t = 0.0; t < 2 * quarter; t += 0.05) {
    const double value = green_time_part(g, t);
    EXPECT_NEAR(green_time_part(g, t + 4 * quarter), value, 1e-10);
    EXPECT_NEAR(green_time_part(g, 2 * quarter - t), value, 1e-10);
    EXPECT_NEAR(green_time_part(g, t + 2 * quarter), -value, 1e-10);
  }
}

TEST(GreenSpectrum, MatchesClassicalSpectrum) {
  const auto g = GreenTimePart::make(0, 1.0, 2.0);
  const auto spectrum = green_spectrum(g, 5);
  const auto classical =
      analysis::mass_spectrum(make_massless(2.0, 1.0, 0.0, Sign::Plus, std::vector{0.0}), 5);
  ASSERT_EQ(spectrum.lines.size(), classical.size());
  EXPECT_NEAR(spectrum.lines[0].energy, 1.1981402347355922, 1e-12);
  for (std::size_t i = 0; i < classical.size(); ++i) {
    EXPECT_EQ(spectrum.lines[i].energy, classical[i].energy);
  }
  EXPECT_EQ(spectrum.phase_index, 0);
  EXPECT_TRUE(spectrum.spatial_delta);
}

TEST(GreenSpectrum, AmplitudesFollowCorrectedPattern) {
  for (double lambda : {2.0, 5.0}) {
    const double mu = 0.9;
    const auto spectrum = green_spectrum(GreenTimePart::make(1, mu, lambda), 4);
    const double k = k_minus_one();
    auto pattern = [](int n) {
      return (2 * n + 1) * std::exp(-(n + 0.5) * pi) / (1 + std::exp(-(2 * n + 1) * pi));
    };
    const double prefactor = std::pow(2.0 / lambda, 0.25) / (2.0 * mu) * pi * pi / (k * k);
    for (int n = 0; n <= 4; ++n) {
      EXPECT_NEAR(spectrum.lines[static_cast<std::size_t>(n)].amplitude, prefactor * pattern(n),
                  1e-10);
    }
    EXPECT_NEAR(spectrum.lines[1].amplitude / spectrum.lines[0].amplitude, pattern(1) / pattern(0),
                1e-8);
  }
}

TEST(GreenSpectrum, SingleLineReconstructionWithinTail) {
  const auto g = GreenTimePart::make(0, 1.0, 2.0);
  const auto full = green_spectrum(g, 12);
  const auto& b0 = full.lines[0];
  double tail = 0.0;
  for (std::size_t i = 1; i < full.lines.size(); ++i) tail += full.lines[i].amplitude;
  double worst = 0.0;
  const double period = period_of(g);
  for (int j = 0; j < 400; ++j) {
    const double t = period * j / 400.0;
    const double approx = b0.amplitude * std::cos(b0.energy * t + full.phases[0]);
    worst = std::max(worst, std::abs(green_time_part(g, t) - approx));
  }
  EXPECT_LE(worst, tail * (1 + 1e-9));
  EXPECT_GE(worst, full.lines[1].amplitude - (tail - full.lines[1].amplitude));
}

TEST(ZeroMode, ResidualAtRoundingLevel) {
  for (double lambda : {0.5, 2.0, 10.0}) {
    for (double mu : {0.5, 1.0, 2.0}) {
      const auto s = make_massless(lambda, mu, 0.3, Sign::Plus, std::vector{0.2, 0.0, 0.0});
      const double period = 4 * k_minus_one() / s.rest_energy();
      double worst = 0.0;
      for (int j = 0; j < 256; ++j) {
        worst = std::max(worst, std::abs(zero_mode_residual(s, period * j / 256.0)));
      }
      EXPECT_LE(worst / zero_mode_scale(s), 1e-9);
    }
  }
}

TEST(ZeroMode, LinearInChiAndSensitiveToBackground) {
  const auto s = make_massless(2.0, 1.0, 0.0, Sign::Minus, std::vector{0.0});
  // The exact residual is zero, so compare against a corrupted background
  // where it is not.
  auto bad = s;
  bad.amplitude *= 1.01;
  double worst = 0.0;
  for (double t = 0.0; t < 6.0; t += 0.05) {
    const double r = zero_mode_residual(bad, t);
    EXPECT_NEAR(zero_mode_residual(bad, t, -3.5), -3.5 * r, 1e-12);
    worst = std::max(worst, std::abs(r));
  }
  EXPECT_GT(worst, 1e-3);
  EXPECT_THROW(zero_mode_residual(make_ssb(1.0, 1.0, 0.0, Sign::Plus, std::vector{0.0}), 0.0),
               DomainError);
}
