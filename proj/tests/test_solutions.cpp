#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "quartic/errors.hpp"
#include "quartic/solutions.hpp"

using namespace quartic;

namespace {

const std::vector<double> kRest{0.0, 0.0, 0.0};  // D = 4 rest frame

double k_minus_one() { return elliptic::complete_k(elliptic::EllipticParameter(-1.0)); }

}  // namespace

TEST(Momentum, MostlyMinusContraction) {
  Momentum p;
  p.energy = 3.0;
  p.spatial = {1.0, 2.0};
  p.dimension = 3;
  EXPECT_DOUBLE_EQ(p.minkowski_square(), 9.0 - 5.0);
  const double x[] = {0.5, -1.0};
  EXPECT_DOUBLE_EQ(p.contract(2.0, x), 6.0 - (0.5 - 2.0));
  const double wrong[] = {1.0};
  EXPECT_THROW(p.contract(0.0, wrong), DomainError);
}

TEST(MakeMassive, DispersionAndDerivedFields) {
  // sqrt(mu0^4 + 2 lambda mu^4) = sqrt(5) for (1, 2, 1).
  const auto s = make_massive(1.0, 2.0, 1.0, 0.0, Sign::Plus, kRest);
  const double root5 = std::sqrt(5.0);
  EXPECT_NEAR(s.momentum.minkowski_square(), (1.0 + root5) / 2.0, 1e-15);
  EXPECT_NEAR(s.momentum.minkowski_square(), 1.6180339887498949, 1e-15);
  EXPECT_NEAR(s.parameter.value(), (-1.0 + root5) / (-1.0 - root5), 1e-15);
  EXPECT_NEAR(s.parameter.value(), -0.38196601125010515, 1e-15);
  EXPECT_NEAR(s.amplitude * s.amplitude, 2.0 / (1.0 + root5), 1e-15);
  EXPECT_EQ(s.momentum.dimension, 4);
  EXPECT_GT(s.momentum.energy, 0.0);
}

TEST(MakeMassive, ParameterStaysInHalfOpenInterval) {
  for (double mu0 : {0.01, 0.5, 1.0, 3.0}) {
    for (double lambda : {0.0, 0.1, 1.0, 100.0}) {
      const auto s = make_massive(mu0, lambda, 1.3, 0.2, Sign::Minus, kRest);
      EXPECT_GT(s.parameter.value(), -1.0);
      EXPECT_LE(s.parameter.value(), 0.0);
      const double rhs = dispersion_rhs(Family::Massive, mu0, lambda, 1.3);
      EXPECT_LE(std::abs(s.momentum.minkowski_square() - rhs), 1e-12 * rhs);
    }
  }
}

TEST(MakeMassive, FreeLimit) {
  const auto s = make_massive(1.5, 1e-14, 2.0, 0.0, Sign::Plus, kRest);
  EXPECT_NEAR(s.momentum.minkowski_square(), 1.5 * 1.5, 1e-12);
  EXPECT_NEAR(s.parameter.value(), 0.0, 1e-13);
  const auto free = make_massive(1.5, 0.0, 2.0, 0.0, Sign::Plus, kRest);
  EXPECT_EQ(free.parameter.value(), 0.0);
  // Linear plane wave A sin(u).
  for (double u = 0.0; u < 7.0; u += 0.5) {
    EXPECT_NEAR(evaluate_phase(free, u), free.amplitude * std::sin(u), 1e-14);
  }
}

TEST(MakeMassive, RejectsInvalidInputs) {
  EXPECT_THROW(make_massive(0.0, 1.0, 1.0, 0.0, Sign::Plus, kRest), DomainError);
  EXPECT_THROW(make_massive(1.0, -1.0, 1.0, 0.0, Sign::Plus, kRest), DomainError);
  EXPECT_THROW(make_massive(1.0, 1.0, 0.0, 0.0, Sign::Plus, kRest), DomainError);
  EXPECT_THROW(make_massive(1.0, 1.0, 1.0, NAN, Sign::Plus, kRest), DomainError);
}

TEST(MakeMassless, Examples) {
  const auto s = make_massless(2.0, 1.0, 0.0, Sign::Plus, kRest);
  EXPECT_NEAR(s.momentum.energy, 1.0, 1e-15);
  EXPECT_NEAR(s.amplitude, 1.0, 1e-15);
  EXPECT_EQ(s.parameter.value(), -1.0);
  const auto t = make_massless(8.0, 1.0, 0.0, Sign::Plus, kRest);
  EXPECT_NEAR(t.momentum.energy, std::sqrt(2.0), 1e-15);
  EXPECT_THROW(make_massless(0.0, 1.0, 0.0, Sign::Plus, kRest), DomainError);
  EXPECT_THROW(make_massless(1.0, -1.0, 0.0, Sign::Plus, kRest), DomainError);
}

TEST(MakeSsb, Examples) {
  const auto s = make_ssb(std::sqrt(3.0), 2.0, 0.0, Sign::Plus, kRest);
  EXPECT_NEAR(s.amplitude, 1.0, 1e-15);
  EXPECT_NEAR(s.momentum.minkowski_square(), 1.0, 1e-15);
  EXPECT_NEAR(s.vacuum_reference(), std::sqrt(1.5), 1e-15);
  EXPECT_THROW(make_ssb(0.0, 2.0, 0.0, Sign::Plus, kRest), DomainError);
  EXPECT_THROW(make_ssb(1.0, 0.0, 0.0, Sign::Plus, kRest), DomainError);
}

TEST(MakeSsb, DnRangeOverOnePeriod) {
  const auto s = make_ssb(2.0, 0.7, 0.3, Sign::Plus, kRest);
  const double period = s.phase_period();
  double lo = 1e300, hi = 0.0;
  for (int j = 0; j <= 4000; ++j) {
    const double v = std::abs(evaluate_phase(s, period * j / 4000.0));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  EXPECT_NEAR(lo, s.amplitude, 1e-12);
  EXPECT_NEAR(hi, std::sqrt(2.0) * s.amplitude, 1e-12);
}

TEST(Evaluate, PhaseExamples) {
  const auto massless = make_massless(2.0, 1.0, 0.0, Sign::Plus, kRest);
  const double origin[] = {0.0, 0.0, 0.0};
  EXPECT_EQ(evaluate(massless, 0.0, origin), 0.0);
  EXPECT_NEAR(evaluate(massless, k_minus_one(), origin), 1.0, 1e-12);
  const auto minus = make_massless(2.0, 1.0, 0.0, Sign::Minus, kRest);
  EXPECT_NEAR(evaluate(minus, k_minus_one(), origin), -1.0, 1e-12);

  const auto ssb = make_ssb(1.0, 1.0, 0.0, Sign::Minus, kRest);
  EXPECT_DOUBLE_EQ(evaluate(ssb, 0.0, origin), -ssb.amplitude);
}

TEST(Evaluate, SignSymmetry) {
  const std::vector<double> k{0.4, -0.2, 0.1};
  const auto plus = make_massive(0.8, 1.5, 1.1, 0.3, Sign::Plus, k);
  const auto minus = make_massive(0.8, 1.5, 1.1, 0.3, Sign::Minus, k);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double x[] = {d(rng), d(rng), d(rng)};
    const double t = d(rng);
    EXPECT_EQ(evaluate(minus, t, x), -evaluate(plus, t, x));
  }
}

TEST(Evaluate, SsbPositiveBranchNeverBelowV) {
  const std::vector<double> k{0.9, 0.0, 0.0};
  const auto s = make_ssb(1.3, 0.4, -0.7, Sign::Plus, k);
  for (double t = 0.0; t < 20.0; t += 0.013) {
    const double x[] = {0.37 * t, 0.0, 1.0};
    EXPECT_GE(evaluate(s, t, x), s.amplitude * (1.0 - 1e-15));
  }
}

TEST(Evaluate, LorentzBoostInvariance) {
  // 1+1D: boost (t, x) and (E, p) together with velocity beta.
  const double beta = 0.55;
  const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  for (Family f : {Family::Massive, Family::Massless, Family::Ssb}) {
    const std::vector<double> k{0.6};
    SolutionSpec s = f == Family::Massive    ? make_massive(0.7, 1.2, 0.9, 0.2, Sign::Plus, k)
                     : f == Family::Massless ? make_massless(1.2, 0.9, 0.2, Sign::Plus, k)
                                             : make_ssb(0.7, 1.2, 0.2, Sign::Plus, k);
    const double e = s.momentum.energy;
    const std::vector<double> kb{gamma * (k[0] - beta * e)};
    SolutionSpec b = f == Family::Massive    ? make_massive(0.7, 1.2, 0.9, 0.2, Sign::Plus, kb)
                     : f == Family::Massless ? make_massless(1.2, 0.9, 0.2, Sign::Plus, kb)
                                             : make_ssb(0.7, 1.2, 0.2, Sign::Plus, kb);
    EXPECT_NEAR(b.momentum.energy, gamma * (e - beta * k[0]), 1e-12);
    for (double t = -3.0; t < 3.0; t += 0.41) {
      for (double x = -2.0; x < 2.0; x += 0.53) {
        const double xs[] = {x};
        const double xb[] = {gamma * (x - beta * t)};
        EXPECT_NEAR(evaluate(b, gamma * (t - beta * x), xb), evaluate(s, t, xs), 1e-10);
      }
    }
  }
}

TEST(Families, MassiveConvergesToMasslessAsMassVanishes) {
  const auto target = make_massless(1.7, 0.8, 0.0, Sign::Plus, kRest);
  double previous = 1e300;
  for (double mu0 : {1e-1, 1e-2, 1e-3}) {
    const auto s = make_massive(mu0, 1.7, 0.8, 0.0, Sign::Plus, kRest);
    const double err = std::max({std::abs(s.amplitude - target.amplitude),
                                 std::abs(s.parameter.value() - target.parameter.value()),
                                 std::abs(s.momentum.minkowski_square() -
                                          target.momentum.minkowski_square())});
    EXPECT_LE(err, 5.0 * mu0 * mu0);
    EXPECT_LT(err, previous);
    previous = err;
  }
}

TEST(RenormalizedMass, Examples) {
  EXPECT_DOUBLE_EQ(renormalized_mass(1.0, 1.0, 0.0), 1.0);
  EXPECT_NEAR(renormalized_mass(0.0, 1.0, 2.0), 1.0, 1e-15);
  EXPECT_NEAR(renormalized_mass(0.0, 1.3, 5.0), std::pow(2.5, 0.25) * 1.3, 1e-14);
  EXPECT_NEAR(renormalized_mass(1.0, 1.0, 2.0), 1.2720196495140690, 1e-15);
  EXPECT_NEAR(renormalized_mass(1.0, 1.0, 2.0),
              std::sqrt(make_massive(1.0, 2.0, 1.0, 0.0, Sign::Plus, kRest)
                            .momentum.minkowski_square()),
              1e-15);
  EXPECT_THROW(renormalized_mass(0.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(renormalized_mass(-1.0, 1.0, 1.0), DomainError);
}

TEST(Families, StringRoundTrip) {
  for (Family f : {Family::Massive, Family::Massless, Family::Ssb}) {
    EXPECT_EQ(family_from_string(to_string(f)), f);
  }
  EXPECT_EQ(sign_from_string("minus"), Sign::Minus);
  EXPECT_THROW(family_from_string("tachyon"), DomainError);
}
