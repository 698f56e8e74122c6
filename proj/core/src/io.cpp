// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include "walshlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace walshlab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

// "# key=value key=value ..." annotation lines.
void parse_header_line(const std::string& line, std::map<std::string, std::string>& headers) {
  std::istringstream tokens(line.substr(1));
  std::string token;
  while (tokens >> token) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) continue;
    headers[token.substr(0, eq)] = token.substr(eq + 1);
  }
}

double parse_value(const std::string& text, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("csv: bad number '" + text + "' on line " + std::to_string(line_no));
  }
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

int required_resolution(const std::map<std::string, std::string>& headers) {
  const auto it = headers.find("resolution");
  if (it == headers.end()) throw std::runtime_error("csv: missing '# resolution=N' header");
  return static_cast<int>(parse_value(it->second, 0));
}

}  // namespace

void write_grid_csv(std::ostream& out, const GridFunction& f,
                    const std::vector<std::pair<std::string, std::string>>& annotations) {
  out << "# resolution=" << f.resolution().bits() << "\n";
  for (const auto& [key, value] : annotations) out << "# " << key << "=" << value << "\n";
  for (double v : f.values()) out << format_double(v) << "\n";
}

void write_grid_csv(const std::string& path, const GridFunction& f,
                    const std::vector<std::pair<std::string, std::string>>& annotations) {
  auto out = open_out(path);
  write_grid_csv(out, f, annotations);
}

GridFunction read_grid_csv(std::istream& in) {
  std::map<std::string, std::string> headers;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      parse_header_line(line, headers);
      continue;
    }
    values.push_back(parse_value(line, line_no));
  }
  const Resolution res(required_resolution(headers));
  return GridFunction(res, std::move(values));
}

GridFunction read_grid_csv_file(const std::string& path) {
  auto in = open_in(path);
  return read_grid_csv(in);
}

void write_coeffs_csv(std::ostream& out, const SpectralCoeffs& coeffs) {
  out << "# system=" << to_string(coeffs.system) << " resolution="
      << coeffs.resolution.bits() << "\n";
  for (std::size_t i = 0; i < coeffs.coeffs.size(); ++i) {
    out << i << "," << format_double(coeffs.coeffs[i]) << "\n";
  }
}

void write_coeffs_csv(const std::string& path, const SpectralCoeffs& coeffs) {
  auto out = open_out(path);
  write_coeffs_csv(out, coeffs);
}

SpectralCoeffs read_coeffs_csv(std::istream& in) {
  std::map<std::string, std::string> headers;
  std::vector<std::pair<std::size_t, double>> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      parse_header_line(line, headers);
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("csv: expected 'index,coefficient' on line " +
                               std::to_string(line_no));
    }
    const auto index = static_cast<std::size_t>(parse_value(line.substr(0, comma), line_no));
    entries.emplace_back(index, parse_value(line.substr(comma + 1), line_no));
  }
  const Resolution res(required_resolution(headers));
  const auto system_it = headers.find("system");
  if (system_it == headers.end()) throw std::runtime_error("csv: missing system header");
  const SystemKind system = system_from_string(system_it->second);

  std::vector<double> coeffs(res.cells(), 0.0);
  for (const auto& [index, value] : entries) {
    if (index >= coeffs.size()) {
      throw std::runtime_error("csv: coefficient index " + std::to_string(index) +
                               " out of range");
    }
    coeffs[index] = value;
  }
  return SpectralCoeffs{res, system, std::move(coeffs)};
}

SpectralCoeffs read_coeffs_csv_file(const std::string& path) {
  auto in = open_in(path);
  return read_coeffs_csv(in);
}

WeightSequence read_weights_csv(std::istream& in, const std::string& label) {
  std::map<std::string, std::string> headers;
  std::vector<double> q;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      parse_header_line(line, headers);
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("weights csv: expected 'k,q_k' on line " +
                               std::to_string(line_no));
    }
    const auto k = static_cast<std::size_t>(parse_value(line.substr(0, comma), line_no));
    if (k != q.size()) {
      throw std::runtime_error("weights csv: indices must run 0,1,2,... without gaps (line " +
                               std::to_string(line_no) + ")");
    }
    q.push_back(parse_value(line.substr(comma + 1), line_no));
  }
  if (q.empty()) throw std::runtime_error("weights csv: no rows");
  Monotonicity monotonicity = Monotonicity::None;
  if (const auto it = headers.find("monotonicity"); it != headers.end()) {
    monotonicity = monotonicity_from_string(it->second);
  }
  return WeightSequence::from_values(std::move(q), monotonicity, label);
}

WeightSequence read_weights_csv_file(const std::string& path) {
  auto in = open_in(path);
  return read_weights_csv(in, path);
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << columns[c] << (c + 1 < columns.size() ? "," : "");
  }
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c] << (c + 1 < row.size() ? "," : "");
    }
    out << "\n";
  }
}

void Table::write_csv_file(const std::string& path) const {
  auto out = open_out(path);
  write_csv(out);
}

Table to_table(const WeightDiagnostics& d) {
  Table t;
  t.columns = {"n", "q_prev", "Q_n", "ratio_node", "ratio_cond1"};
  for (const auto& row : d.rows) {
    t.rows.push_back({std::to_string(row.n), format_double(row.q_prev), format_double(row.Q_n),
                      format_double(row.ratio_node), format_double(row.ratio_cond1)});
  }
  return t;
}

Table to_table(const DivergenceReport& r) {
  Table t;
  t.columns = {"k",          "alpha_k",        "n_k",        "min_abs_T",
               "paper_bound", "weak_quasinorm", "hardy_norm", "ratio"};
  for (const auto& row : r.rows) {
    t.rows.push_back({std::to_string(row.k), std::to_string(row.alpha_k),
                      std::to_string(row.n_k), format_double(row.min_abs_t),
                      format_double(row.paper_bound), format_double(row.weak_quasinorm),
                      format_double(row.hardy_norm), format_double(row.ratio)});
  }
  return t;
}

std::string atom_report_json(const AtomReport& report) {
  std::ostringstream out;
  out << "{\"mean_ok\":" << (report.mean_ok ? "true" : "false")
      << ",\"size_ok\":" << (report.size_ok ? "true" : "false")
      << ",\"support_ok\":" << (report.support_ok ? "true" : "false")
      << ",\"measured_sup\":" << format_double(report.measured_sup)
      << ",\"bound\":" << format_double(report.bound) << "}";
  return out.str();
}

}  // namespace walshlab
