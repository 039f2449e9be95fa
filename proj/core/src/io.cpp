#include "quartic/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "quartic/errors.hpp"

namespace quartic::io {
std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 14);
  return std::string(buf, res.ptr);
}

double round15(double value) {
  if (!std::isfinite(value)) return value;
  const std::string s = format_number(value);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

namespace {

void dump_into(std::string& out, const nlohmann::json& j, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close_pad(2 * static_cast<std::size_t>(depth), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_number(v) : "null";
      return;
    }
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(key).dump() + ": ";
        dump_into(out, value, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        dump_into(out, j[i], depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j) {
  std::string out;
  dump_into(out, j, 0);
  out += '\n';
  return out;
}

nlohmann::json to_json(const SolutionSpec& spec) {
  nlohmann::json spatial = nlohmann::json::array();
  for (double k : spec.momentum.spatial) spatial.push_back(round15(k));
  return {
      {"family", std::string(to_string(spec.family))},
      {"mu0", round15(spec.mu0)},
      {"lambda", round15(spec.lambda)},
      {"mu", round15(spec.mu)},
      {"theta", round15(spec.theta)},
      {"sign", std::string(to_string(spec.sign))},
      {"momentum",
       {{"energy", round15(spec.momentum.energy)},
        {"spatial", spatial},
        {"dimension", spec.momentum.dimension}}},
      {"amplitude", round15(spec.amplitude)},
      {"parameter", round15(spec.parameter.value())},
  };
}

SolutionSpec solution_from_json(const nlohmann::json& j) {
  try {
    const Family family = family_from_string(j.at("family").get<std::string>());
    const Sign sign = sign_from_string(j.at("sign").get<std::string>());
    const double theta = j.at("theta").get<double>();
    const auto spatial = j.at("momentum").at("spatial").get<std::vector<double>>();

    SolutionSpec s;
    switch (family) {
      case Family::Massive:
        s = make_massive(j.at("mu0").get<double>(), j.at("lambda").get<double>(),
                         j.at("mu").get<double>(), theta, sign, spatial);
        break;
      case Family::Massless:
        s = make_massless(j.at("lambda").get<double>(), j.at("mu").get<double>(), theta, sign,
                          spatial);
        break;
      case Family::Ssb:
        s = make_ssb(j.at("mu0").get<double>(), j.at("lambda").get<double>(), theta, sign,
                     spatial);
        break;
    }
    // Stored values went through 15-digit rounding.
    auto agrees = [](double stored, double rebuilt) {
      return std::abs(stored - rebuilt) <= 1e-13 * std::max(1.0, std::abs(rebuilt));
    };
    if (!agrees(j.at("amplitude").get<double>(), s.amplitude) ||
        !agrees(j.at("parameter").get<double>(), s.parameter.value()) ||
        !agrees(j.at("momentum").at("energy").get<double>(), s.momentum.energy)) {
      throw DomainError("stored derived fields disagree with the solution constants");
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed solution JSON: ") + e.what());
  }
}

nlohmann::json to_json(const std::vector<analysis::SpectrumLine>& lines) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : lines) {
    arr.push_back({{"n", l.n}, {"energy", round15(l.energy)}, {"amplitude", round15(l.amplitude)}});
  }
  return arr;
}

nlohmann::json to_json(const quantum::GreenSpectrum& spectrum) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < spectrum.lines.size(); ++i) {
    const auto& l = spectrum.lines[i];
    arr.push_back({{"n", l.n},
                   {"energy", round15(l.energy)},
                   {"amplitude", round15(l.amplitude)},
                   {"phase", round15(spectrum.phases[i])},
                   {"phase_index", spectrum.phase_index}});
  }
  return {{"lines", arr}, {"spatial_delta", spectrum.spatial_delta}};
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out) {
  for (const auto& h : header) cell(h);
  end_row();
}

void CsvWriter::separator() {
  if (!first_in_row_) out_ << ',';
  first_in_row_ = false;
}

CsvWriter& CsvWriter::cell(double value) {
  separator();
  out_ << format_number(value);
  return *this;
}

CsvWriter& CsvWriter::cell(long long value) {
  separator();
  out_ << value;
  return *this;
}

CsvWriter& CsvWriter::cell(const std::string& value) {
  separator();
  out_ << value;
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  first_in_row_ = true;
}

void write_spectrum_csv(std::ostream& out, const std::vector<analysis::SpectrumLine>& lines) {
  CsvWriter csv(out, {"n", "energy", "amplitude"});
  for (const auto& l : lines) {
    csv.cell(static_cast<long long>(l.n)).cell(l.energy).cell(l.amplitude);
    csv.end_row();
  }
}

void write_green_csv(std::ostream& out, const quantum::GreenSpectrum& spectrum) {
  CsvWriter csv(out, {"n", "energy", "amplitude", "phase", "phase_index"});
  for (std::size_t i = 0; i < spectrum.lines.size(); ++i) {
    const auto& l = spectrum.lines[i];
    csv.cell(static_cast<long long>(l.n)).cell(l.energy).cell(l.amplitude).cell(spectrum.phases[i]);
    csv.cell(static_cast<long long>(spectrum.phase_index));
    csv.end_row();
  }
}

}  // namespace quartic::io
