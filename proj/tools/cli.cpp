#include "cli.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "quartic/analysis.hpp"
#include "quartic/errors.hpp"
#include "quartic/io.hpp"
#include "quartic/quantum.hpp"
#include "quartic/simulator.hpp"
#include "quartic/solutions.hpp"
#include "verify.hpp"

namespace quartic::cli {
namespace {

using nlohmann::json;
using std::numbers::pi;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Frequency mismatch above this fails `simulate`.
constexpr double kFrequencyTolerance = 0.01;
// Default rest-frame time step; rest-frame grids are uniform so only dt
// matters and the length is derived from it.
constexpr double kRestFrameDt = 1e-3;
constexpr int kSamplesPerPeriod = 64;
constexpr double kMinSampledPeriods = 8.1;

struct Globals {
  std::string output;
  std::string format = "csv";
  std::string config;
  int seed_dims = 4;
};

struct SolutionArgs {
  std::string family;
  std::optional<double> mu0, lambda, mu;
  double theta = 0.0;
  std::string sign = "plus";
  std::string momentum;
};

void add_solution_options(CLI::App* cmd, SolutionArgs& a, bool family_required) {
  auto* fam = cmd->add_option("--family", a.family, "massive | massless | ssb")
                  ->check(CLI::IsMember({"massive", "massless", "ssb"}));
  if (family_required) fam->required();
  cmd->add_option("--mu0", a.mu0, "bare mass mu0");
  cmd->add_option("--lambda", a.lambda, "quartic coupling");
  cmd->add_option("--mu", a.mu, "integration constant mu");
  cmd->add_option("--theta", a.theta, "phase offset");
  cmd->add_option("--sign", a.sign, "plus | minus")->check(CLI::IsMember({"plus", "minus"}));
  cmd->add_option("--momentum", a.momentum, "spatial momentum, comma separated (D-1 values)");
}

std::vector<double> parse_momentum(const std::string& text, int dims) {
  if (dims < 2) throw ConfigError("--seed-dims must be >= 2");
  std::vector<double> k;
  if (text.empty()) return std::vector<double>(static_cast<std::size_t>(dims - 1), 0.0);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(' ', used) != std::string::npos || !std::isfinite(v)) {
      throw ConfigError("--momentum entry is not a number: '" + item + "'");
    }
    k.push_back(v);
  }
  if (static_cast<int>(k.size()) != dims - 1) {
    throw ConfigError("--momentum needs " + std::to_string(dims - 1) +
                      " components for --seed-dims " + std::to_string(dims));
  }
  return k;
}

double require(const std::optional<double>& v, const char* flag, const std::string& family) {
  if (!v) throw ConfigError(std::string("--") + flag + " is required for family " + family);
  return *v;
}

SolutionSpec build_spec(const SolutionArgs& a, const std::vector<double>& spatial) {
  const Family family = family_from_string(a.family);
  const Sign sign = sign_from_string(a.sign);
  switch (family) {
    case Family::Massive:
      return make_massive(require(a.mu0, "mu0", a.family), require(a.lambda, "lambda", a.family),
                          require(a.mu, "mu", a.family), a.theta, sign, spatial);
    case Family::Massless:
      return make_massless(require(a.lambda, "lambda", a.family), require(a.mu, "mu", a.family),
                           a.theta, sign, spatial);
    case Family::Ssb:
      return make_ssb(require(a.mu0, "mu0", a.family), require(a.lambda, "lambda", a.family),
                      a.theta, sign, spatial);
  }
  throw DomainError("unknown family");
}

// ---- config file ----------------------------------------------------------

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<std::string> config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key.empty() || key == "config") {
      throw ConfigError(path + ":" + std::to_string(number) + ": invalid key");
    }
    entries.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return entries;
}

bool has_flag(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Config entries become flags placed right after the subcommand, skipping
// keys the command line already sets.
std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const std::vector<std::string>& subcommands) {
  const auto path = config_path(args);
  if (!path) return args;
  const auto entries = read_config(*path);
  auto sub = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
    return std::find(subcommands.begin(), subcommands.end(), a) != subcommands.end();
  });
  if (sub == args.end()) return args;
  std::vector<std::string> merged(args.begin(), sub + 1);
  for (const auto& [key, value] : entries) {
    if (has_flag(args, key)) continue;
    merged.push_back("--" + key);
    merged.push_back(value);
  }
  merged.insert(merged.end(), sub + 1, args.end());
  return merged;
}

// ---- output ---------------------------------------------------------------

void write_file(const std::string& path, const std::string& data) {
  // Whole-file write through a sibling temporary, so readers never see a
  // truncated artifact.
  const std::string tmp = path + ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << data;
    f.flush();
    if (!f) {
      std::remove(tmp.c_str());
      throw IoError("write failed for " + path);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw IoError("cannot move output into place at " + path + ": " + ec.message());
  }
}

void emit(const Globals& g, const std::string& data, std::ostream& out) {
  if (g.output.empty()) {
    out << data;
    out.flush();
    if (!out) throw IoError("write to standard output failed");
  } else {
    write_file(g.output, data);
  }
}

// ---- commands -------------------------------------------------------------

struct EvalArgs {
  SolutionArgs sol;
  int points = 100;
  std::optional<double> u_min, u_max;
};

int cmd_eval(const Globals& g, const EvalArgs& a, std::ostream& out, std::ostream&) {
  if (a.points < 2) throw ConfigError("--points must be >= 2");
  const auto spec = build_spec(a.sol, parse_momentum(a.sol.momentum, g.seed_dims));
  const double lo = a.u_min.value_or(0.0);
  const double hi = a.u_max.value_or(lo + spec.phase_period());
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw ConfigError("--u-max must exceed --u-min");
  }
  std::vector<double> us, phis;
  for (int j = 0; j < a.points; ++j) {
    const double u = j == a.points - 1 ? hi : lo + (hi - lo) * j / (a.points - 1);
    us.push_back(u);
    phis.push_back(evaluate_phase(spec, u));
  }

  std::ostringstream buf;
  if (g.format == "json") {
    buf << io::dump_json({{"solution", io::to_json(spec)}, {"u", us}, {"phi", phis}});
  } else {
    io::CsvWriter csv(buf, {"u", "phi"});
    for (std::size_t j = 0; j < us.size(); ++j) {
      csv.cell(us[j]).cell(phis[j]);
      csv.end_row();
    }
  }
  emit(g, buf.str(), out);
  return kOk;
}

struct VerifyArgs {
  std::string family;
  std::string check = "all";
  std::string corrupt;
  std::optional<double> lambda, scale;
  std::string momentum;
};

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyPlan plan;
  plan.families = a.family.empty()
                      ? std::vector<Family>{Family::Massive, Family::Massless, Family::Ssb}
                      : std::vector<Family>{family_from_string(a.family)};
  if (a.check == "all") {
    plan.checks = {"residual", "fourier", "green", "zero-mode"};
  } else {
    plan.checks = {a.check};
    if ((a.check == "green" || a.check == "zero-mode") &&
        std::find(plan.families.begin(), plan.families.end(), Family::Massless) ==
            plan.families.end()) {
      throw ConfigError("--check " + a.check + " applies to the massless family only");
    }
  }
  if (a.lambda) plan.lambdas = {*a.lambda};
  if (a.scale) plan.scales = {*a.scale};
  plan.spatial = parse_momentum(a.momentum, g.seed_dims);
  if (!a.corrupt.empty()) plan.corruption = parse_corruption(a.corrupt);

  const auto results = run_checks(plan);
  std::ostringstream buf;
  if (g.format == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"check", r.name},
                      {"family", r.family},
                      {"lambda", r.lambda},
                      {"scale", r.scale},
                      {"phase_index", r.phase_index},
                      {"measured", r.measured},
                      {"tolerance", r.tolerance},
                      {"passed", r.passed()}});
    }
    const bool all = std::all_of(results.begin(), results.end(),
                                 [](const CheckResult& r) { return r.passed(); });
    buf << io::dump_json({{"checks", rows}, {"passed", all}});
  } else {
    io::CsvWriter csv(buf, {"check", "family", "lambda", "scale", "phase_index", "measured",
                            "tolerance", "status"});
    for (const auto& r : results) {
      csv.cell(r.name).cell(r.family).cell(r.lambda).cell(r.scale);
      csv.cell(static_cast<long long>(r.phase_index)).cell(r.measured).cell(r.tolerance);
      csv.cell(std::string(r.passed() ? "pass" : "fail"));
      csv.end_row();
    }
  }
  emit(g, buf.str(), out);

  int failures = 0;
  for (const auto& r : results) {
    if (r.passed()) continue;
    ++failures;
    err << "FAIL " << r.name << " family=" << r.family << " lambda=" << io::format_number(r.lambda)
        << " scale=" << io::format_number(r.scale) << " measured=" << io::format_number(r.measured)
        << " tolerance=" << io::format_number(r.tolerance) << '\n';
  }
  err << results.size() - static_cast<std::size_t>(failures) << "/" << results.size()
      << " checks passed\n";
  return failures == 0 ? kOk : kCheckFailed;
}

struct FourierArgs {
  SolutionArgs sol;
  int terms = 8;
};

int cmd_fourier(const Globals& g, const FourierArgs& a, std::ostream& out, std::ostream& err) {
  if (a.terms < 1) throw ConfigError("--terms must be >= 1");
  const auto spec = build_spec(a.sol, parse_momentum(a.sol.momentum, g.seed_dims));
  const auto series = analysis::fourier_series(spec, a.terms);

  const double period = spec.phase_period();
  double deviation = 0.0;
  for (int j = 0; j < 512; ++j) {
    const double u = period * j / 512.0;
    deviation = std::max(deviation,
                         std::abs(analysis::partial_sum(series, u) - evaluate_phase(spec, u)));
  }
  const double mean_square = analysis::periodic_average(
      [&](double u) {
        const double f = evaluate_phase(spec, u);
        return f * f;
      },
      period);
  double parseval = series.kind == analysis::SeriesKind::Dn
                        ? series.constant_term * series.constant_term
                        : 0.0;
  for (double c : series.coefficients) parseval += 0.5 * c * c;
  const double parseval_error = std::abs(parseval - mean_square) / mean_square;
  const double relative_deviation = deviation / spec.amplitude;

  // Rows: (n, harmonic, coefficient); the dn mean is harmonic 0.
  struct Row {
    long long n;
    long long harmonic;
    double coefficient;
  };
  std::vector<Row> rows;
  if (series.kind == analysis::SeriesKind::Dn) rows.push_back({0, 0, series.constant_term});
  for (std::size_t i = 0; i < series.coefficients.size(); ++i) {
    const long long n = series.kind == analysis::SeriesKind::Dn ? static_cast<long long>(i) + 1
                                                                : static_cast<long long>(i);
    rows.push_back({n, series.harmonic(i), series.coefficients[i]});
  }

  std::ostringstream buf;
  if (g.format == "json") {
    json coeffs = json::array();
    for (const auto& r : rows) {
      coeffs.push_back({{"n", r.n}, {"harmonic", r.harmonic}, {"coefficient", r.coefficient}});
    }
    buf << io::dump_json({{"solution", io::to_json(spec)},
                          {"kind", series.kind == analysis::SeriesKind::Sn ? "sn" : "dn"},
                          {"fundamental", series.fundamental},
                          {"coefficients", coeffs},
                          {"max_partial_sum_deviation", relative_deviation},
                          {"parseval_relative_error", parseval_error}});
  } else {
    io::CsvWriter csv(buf, {"n", "harmonic", "coefficient"});
    for (const auto& r : rows) {
      csv.cell(r.n).cell(r.harmonic).cell(r.coefficient);
      csv.end_row();
    }
  }
  emit(g, buf.str(), out);
  err << "partial sum (" << a.terms << " terms) max |deviation| / amplitude = "
      << io::format_number(relative_deviation) << '\n'
      << "Parseval relative error = " << io::format_number(parseval_error) << '\n';
  return kOk;
}

struct SpectrumArgs {
  SolutionArgs sol;
  int n_max = 4;
  std::string compare;
};

int cmd_spectrum(const Globals& g, const SpectrumArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n_max < 0) throw ConfigError("--n-max must be >= 0");
  if (!a.compare.empty() && a.compare != "green") {
    throw ConfigError("--compare accepts only 'green'");
  }
  const auto spec = build_spec(a.sol, parse_momentum(a.sol.momentum, g.seed_dims));
  if (!a.compare.empty() && spec.family != Family::Massless) {
    throw ConfigError("--compare green needs the massless family");
  }
  const auto lines = analysis::mass_spectrum(spec, a.n_max);

  std::optional<quantum::GreenSpectrum> green;
  if (!a.compare.empty()) {
    green = quantum::green_spectrum(quantum::GreenTimePart::make(0, spec.mu, spec.lambda), a.n_max);
  }

  std::ostringstream buf;
  if (g.format == "json") {
    json doc = {{"solution", io::to_json(spec)}, {"lines", io::to_json(lines)}};
    if (green) doc["green"] = io::to_json(*green);
    buf << io::dump_json(doc);
  } else if (green) {
    io::CsvWriter csv(buf, {"n", "energy", "amplitude", "green_energy", "green_amplitude"});
    for (std::size_t i = 0; i < lines.size(); ++i) {
      csv.cell(static_cast<long long>(lines[i].n)).cell(lines[i].energy).cell(lines[i].amplitude);
      csv.cell(green->lines[i].energy).cell(green->lines[i].amplitude);
      csv.end_row();
    }
  } else {
    io::write_spectrum_csv(buf, lines);
  }
  emit(g, buf.str(), out);

  if (green) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].energy != green->lines[i].energy) {
        err << "FAIL energy mismatch at n=" << lines[i].n << '\n';
        return kCheckFailed;
      }
    }
    err << "green energies bit-equal to the classical spectrum for n <= " << a.n_max << '\n';
  }
  return kOk;
}

struct GreenArgs {
  std::optional<double> lambda, mu;
  int phase_index = 0;
  int n_max = 4;
};

int cmd_green(const Globals& g, const GreenArgs& a, std::ostream& out, std::ostream&) {
  if (!a.lambda || !a.mu) throw ConfigError("green needs --lambda and --mu");
  if (a.n_max < 0) throw ConfigError("--n-max must be >= 0");
  const auto spectrum =
      quantum::green_spectrum(quantum::GreenTimePart::make(a.phase_index, *a.mu, *a.lambda),
                              a.n_max);
  std::ostringstream buf;
  if (g.format == "json") {
    json doc = io::to_json(spectrum);
    doc["lambda"] = *a.lambda;
    doc["mu"] = *a.mu;
    buf << io::dump_json(doc);
  } else {
    io::write_green_csv(buf, spectrum);
  }
  emit(g, buf.str(), out);
  return kOk;
}

struct SimulateArgs {
  SolutionArgs sol;
  double px = 0.0;
  std::optional<int> nx;
  std::optional<double> length;
  double cfl = 0.5;
  double periods = 10.0;
  std::optional<int> sample_every;
  std::string manifest;
};

int cmd_simulate(const Globals& g, const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.sol.momentum.empty()) throw ConfigError("simulate takes --px, not --momentum");
  if (!std::isfinite(a.periods) || !(a.periods > 0.0)) throw ConfigError("--periods must be > 0");
  if (g.seed_dims < 2) throw ConfigError("--seed-dims must be >= 2");
  std::vector<double> spatial(static_cast<std::size_t>(g.seed_dims - 1), 0.0);
  spatial[0] = a.px;
  const auto spec = build_spec(a.sol, spatial);

  const bool rest = a.px == 0.0;
  const int nx = a.nx.value_or(rest ? 16 : 1024);
  const double length =
      a.length.value_or(rest ? nx * kRestFrameDt / a.cfl : sim::spatial_period(spec));
  const auto grid = sim::GridSpec::from_cfl(nx, length, a.cfl);
  const auto initial = sim::seed_from_spec(spec, grid);
  const auto params = sim::field_params(spec);

  const double period = spec.phase_period() / spec.momentum.energy;
  const auto steps = static_cast<std::int64_t>(std::llround(a.periods * period / grid.dt));
  const int every =
      a.sample_every.value_or(std::max(1, static_cast<int>(period / grid.dt / kSamplesPerPeriod)));
  if (every < 1) throw ConfigError("--sample-every must be >= 1");
  // Only whole sample intervals are recorded, so check what is actually
  // covered. The discrete oscillation runs slightly slow, hence the margin
  // over the 8 periods measure_frequency insists on.
  const double covered = static_cast<double>(steps / every * every) * grid.dt;
  if (covered < kMinSampledPeriods * period) {
    throw ConfigError("sampled span covers " + io::format_number(covered / period) +
                      " periods; at least " + io::format_number(kMinSampledPeriods) +
                      " are needed (raise --periods)");
  }

  const auto result = sim::run(initial, grid, params, steps, every);

  std::vector<std::pair<double, double>> series;
  for (const auto& s : result.samples) series.emplace_back(s.time, s.probe);
  const double predicted = 2.0 * pi / period;
  const double measured = sim::measure_frequency(series);
  const double rel = std::abs(measured - predicted) / predicted;

  std::ostringstream buf;
  if (g.format == "json") {
    json samples = json::array();
    for (const auto& s : result.samples) {
      samples.push_back({{"time", s.time}, {"probe_value", s.probe}, {"energy", s.energy}});
    }
    buf << io::dump_json({{"samples", samples}});
  } else {
    io::CsvWriter csv(buf, {"time", "probe_value", "energy"});
    for (const auto& s : result.samples) {
      csv.cell(s.time).cell(s.probe).cell(s.energy);
      csv.end_row();
    }
  }

  std::string manifest;
  if (!a.manifest.empty()) {
    manifest = io::dump_json({
        {"grid", {{"nx", grid.nx}, {"length", grid.length}, {"dt", grid.dt}, {"cfl", grid.cfl()}}},
        {"params",
         {{"equation", params.equation == sim::Equation::WrongSignMass ? "wrong_sign_mass"
                                                                        : "positive_mass"},
          {"mu0", params.mu0},
          {"lambda", params.lambda}}},
        {"seed", io::to_json(spec)},
        {"steps", steps},
        {"sample_every", every},
        {"periods", a.periods},
        {"predicted_frequency", predicted},
        {"measured_frequency", measured},
        {"frequency_relative_error", rel},
        {"max_relative_energy_drift", result.max_relative_drift},
    });
  }
  emit(g, buf.str(), out);
  if (!manifest.empty()) write_file(a.manifest, manifest);

  err << "predicted frequency " << io::format_number(predicted) << '\n'
      << "measured frequency  " << io::format_number(measured) << '\n'
      << "relative error      " << io::format_number(rel) << '\n'
      << "max energy drift    " << io::format_number(result.max_relative_drift) << '\n';
  if (rel > kFrequencyTolerance) {
    err << "FAIL frequency error exceeds " << io::format_number(kFrequencyTolerance) << '\n';
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solutions, spectra and Green function of quartic scalar field theory",
               "quartic"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--output", g.output, "write data here instead of standard output");
  app.add_option("--format", g.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", g.config, "flat key=value file; flags override it");
  app.add_option("--seed-dims", g.seed_dims, "spacetime dimension D")->check(CLI::Range(2, 64));

  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "evaluate a solution over a range of phases");
  add_solution_options(c_eval, eval.sol, true);
  c_eval->add_option("--points", eval.points, "number of rows");
  c_eval->add_option("--u-min", eval.u_min, "first phase (default 0)");
  c_eval->add_option("--u-max", eval.u_max, "last phase (default u-min + one period)");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "run residual and identity checks");
  c_verify->add_option("--family", verify.family)
      ->check(CLI::IsMember({"massive", "massless", "ssb"}));
  c_verify->add_option("--check", verify.check, "residual | fourier | green | zero-mode | all")
      ->check(CLI::IsMember({"residual", "fourier", "green", "zero-mode", "all"}));
  c_verify->add_option("--corrupt", verify.corrupt, "field:factor, e.g. energy:1.01");
  c_verify->add_option("--lambda", verify.lambda, "restrict the sweep to one coupling");
  c_verify->add_option("--scale", verify.scale, "restrict the sweep to one mass scale");
  c_verify->add_option("--momentum", verify.momentum, "spatial momentum (D-1 values)");

  FourierArgs fourier;
  auto* c_fourier = app.add_subcommand("fourier", "Fourier coefficients of a solution");
  add_solution_options(c_fourier, fourier.sol, true);
  c_fourier->add_option("--terms", fourier.terms, "number of retained harmonics");

  SpectrumArgs spectrum;
  auto* c_spectrum = app.add_subcommand("spectrum", "mass spectrum lines");
  add_solution_options(c_spectrum, spectrum.sol, true);
  c_spectrum->add_option("--n-max", spectrum.n_max, "highest level");
  c_spectrum->add_option("--compare", spectrum.compare, "green: add the Green-function spectrum");

  GreenArgs green;
  auto* c_green = app.add_subcommand("green", "spectrum of the massless Green function");
  c_green->add_option("--lambda", green.lambda, "quartic coupling")->required();
  c_green->add_option("--mu", green.mu, "integration constant mu")->required();
  c_green->add_option("--phase-index", green.phase_index, "phase family index n >= 0");
  c_green->add_option("--n-max", green.n_max, "highest level");

  SimulateArgs simulate;
  auto* c_sim = app.add_subcommand("simulate", "direct 1+1D integration of the field equation");
  add_solution_options(c_sim, simulate.sol, true);
  c_sim->add_option("--px", simulate.px, "spatial momentum along x (0: rest frame)");
  c_sim->add_option("--nx", simulate.nx, "grid points (power of two)");
  c_sim->add_option("--length", simulate.length, "domain length");
  c_sim->add_option("--cfl", simulate.cfl, "dt nx / length");
  c_sim->add_option("--periods", simulate.periods, "run length in oscillation periods");
  c_sim->add_option("--sample-every", simulate.sample_every, "steps between samples");
  c_sim->add_option("--manifest", simulate.manifest, "JSON run manifest path");

  try {
    std::vector<std::string> names;
    for (const auto* sub : app.get_subcommands({})) names.push_back(sub->get_name());
    auto args = merge_config(raw_args, names);
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (c_eval->parsed()) return cmd_eval(g, eval, out, err);
    if (c_verify->parsed()) return cmd_verify(g, verify, out, err);
    if (c_fourier->parsed()) return cmd_fourier(g, fourier, out, err);
    if (c_spectrum->parsed()) return cmd_spectrum(g, spectrum, out, err);
    if (c_green->parsed()) return cmd_green(g, green, out, err);
    if (c_sim->parsed()) return cmd_simulate(g, simulate, out, err);
    return kValidation;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const DivergenceError& e) {
    err << "diverged: " << e.what() << '\n';
    return kDivergence;
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kValidation;
  } catch (const DomainError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kValidation;
  } catch (const AnalysisError& e) {
    err << "analysis failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace quartic::cli
