#pragma once

// Serialisation shared by the library and the CLI. Numbers are written with
// 15 significant digits in scientific notation, independent of the locale,
// so identical inputs give byte-identical files.

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "quartic/analysis.hpp"
#include "quartic/quantum.hpp"
#include "quartic/solutions.hpp"

namespace quartic::io {

/// "1.23456789012345e+00"
std::string format_number(double value);

/// Value rounded to 15 significant digits (what format_number prints).
double round15(double value);

/// Serialises `j` with every floating-point value written by format_number
/// (non-finite values become null), two-space indent, keys in sorted order.
std::string dump_json(const nlohmann::json& j);

nlohmann::json to_json(const SolutionSpec& spec);

/// Rebuilds the spec through the family constructor and checks that the
/// stored derived fields (amplitude, parameter, energy) agree with it.
SolutionSpec solution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<analysis::SpectrumLine>& lines);
nlohmann::json to_json(const quantum::GreenSpectrum& spectrum);

/// CSV with header, comma separator, LF line endings.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);

  CsvWriter& cell(double value);
  CsvWriter& cell(long long value);
  CsvWriter& cell(const std::string& value);
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  bool first_in_row_ = true;
};

void write_spectrum_csv(std::ostream& out, const std::vector<analysis::SpectrumLine>& lines);
void write_green_csv(std::ostream& out, const quantum::GreenSpectrum& spectrum);

}  // namespace quartic::io
