#pragma once

// The check battery behind `quartic verify`.

#include <optional>
#include <string>
#include <vector>

#include "quartic/solutions.hpp"

namespace quartic::cli {

struct CheckResult {
  std::string name;
  std::string family;
  double lambda = 0.0;
  double scale = 0.0;  // mass scale of the sweep point
  int phase_index = -1;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed() const { return measured <= tolerance; }
};

/// Multiplicative corruption applied to every constructed spec (and to the
/// matching Green function constant) before checking.
struct Corruption {
  std::string field;  // "energy" or "amplitude"
  double factor = 1.0;
};

struct VerifyPlan {
  std::vector<Family> families;
  std::vector<double> lambdas{0.1, 1.0, 10.0};
  std::vector<double> scales{0.5, 1.0, 2.0};
  std::vector<std::string> checks;  // residual, fourier, green, zero-mode
  std::vector<double> spatial;      // momentum, length D - 1
  std::optional<Corruption> corruption;
};

Corruption parse_corruption(const std::string& text);

/// Mass scale enters as mu0 = mu = scale (massive), mu = scale (massless),
/// mu0 = scale (SSB).
SolutionSpec sweep_spec(Family family, double lambda, double scale,
                        const std::vector<double>& spatial);

std::vector<CheckResult> run_checks(const VerifyPlan& plan);

}  // namespace quartic::cli
