// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include "walshlab/hardy.hpp"

#include <cmath>
#include <stdexcept>

namespace walshlab {

GridFunction condexp(const GridFunction& f, int level) {
  const int nbits = f.resolution().bits();
  if (level < 0 || level > nbits) {
    throw std::invalid_argument("condexp: level " + std::to_string(level) +
                                " out of [0, " + std::to_string(nbits) + "]");
  }
  const std::size_t block = std::size_t{1} << (nbits - level);
  std::vector<double> out(f.size());
  for (std::size_t start = 0; start < f.size(); start += block) {
    double sum = 0.0;
    for (std::size_t j = start; j < start + block; ++j) sum += f[j];
    const double avg = sum / static_cast<double>(block);
    for (std::size_t j = start; j < start + block; ++j) out[j] = avg;
  }
  return GridFunction(f.resolution(), std::move(out));
}

bool is_level_measurable(const GridFunction& f, int level) {
  const GridFunction e = condexp(f, level);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (e[j] != f[j]) return false;
  }
  return true;
}

GridFunction maximal_function(const GridFunction& f) {
  const int nbits = f.resolution().bits();
  std::vector<double> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = std::abs(f[j]);  // level N
  for (int level = 0; level < nbits; ++level) {
    const GridFunction e = condexp(f, level);
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = std::max(out[j], std::abs(e[j]));
  }
  return GridFunction(f.resolution(), std::move(out));
}

double hardy_norm(const GridFunction& f, double p) {
  return lp_norm(maximal_function(f), p);
}

AtomReport is_p_atom(const GridFunction& a, double p, const DyadicInterval& interval) {
  if (!(p > 0.0)) throw std::invalid_argument("is_p_atom: p must be positive");
  const Resolution res = a.resolution();
  const std::size_t first = interval.first_cell(res);
  const std::size_t count = interval.cell_count(res);

  AtomReport report;
  report.measured_sup = sup_norm(a);
  report.bound = std::exp2(static_cast<double>(interval.level()) / p);  // mu(I)^(-1/p)
  const double tol = 1e-12 * std::max(1.0, report.measured_sup);

  report.support_ok = true;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j >= first && j < first + count) continue;
    if (std::abs(a[j]) > tol) {
      report.support_ok = false;
      break;
    }
  }

  double sum = 0.0;
  for (std::size_t j = first; j < first + count; ++j) sum += a[j];
  report.measured_mean = std::ldexp(sum, -res.bits());
  report.mean_ok = std::abs(report.measured_mean) <= tol;

  report.size_ok = report.measured_sup <= report.bound * (1.0 + 1e-12);
  return report;
}

Atom Atom::certified(GridFunction values, double p, const DyadicInterval& interval) {
  const AtomReport report = is_p_atom(values, p, interval);
  if (!report.ok()) {
    std::string what = "Atom::certified: not a p-atom (";
    if (!report.mean_ok) what += " mean";
    if (!report.size_ok) what += " size";
    if (!report.support_ok) what += " support";
    what += " )";
    throw std::invalid_argument(what);
  }
  return Atom{interval, std::move(values)};
}

}  // namespace walshlab
