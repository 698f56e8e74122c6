// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include "walshlab/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace walshlab {

Resolution::Resolution(int n_bits) : bits_(n_bits) {
  if (n_bits < 1 || n_bits > kMaxBits) {
    throw std::invalid_argument("Resolution: n_bits must be in [1, " +
                                std::to_string(kMaxBits) + "], got " + std::to_string(n_bits));
  }
}

DyadicPoint::DyadicPoint(Resolution res, std::size_t cell_index) : res_(res), cell_(cell_index) {
  if (cell_index >= res.cells()) {
    throw std::invalid_argument("DyadicPoint: cell index " + std::to_string(cell_index) +
                                " out of range for resolution " + std::to_string(res.bits()));
  }
}

int DyadicPoint::coordinate(int k) const {
  if (k < 0 || k >= res_.bits()) {
    throw std::invalid_argument("DyadicPoint::coordinate: index " + std::to_string(k) +
                                " not represented at resolution " + std::to_string(res_.bits()));
  }
  return static_cast<int>((cell_ >> (res_.bits() - 1 - k)) & 1u);
}

DyadicPoint xor_add(const DyadicPoint& x, const DyadicPoint& y) {
  if (x.resolution() != y.resolution()) {
    throw std::invalid_argument("xor_add: resolution mismatch");
  }
  // coordinate-wise mod-2 addition == bitwise XOR under the cell layout
  return DyadicPoint(x.resolution(), x.cell() ^ y.cell());
}

DyadicInterval::DyadicInterval(int level, std::size_t prefix) : level_(level), prefix_(prefix) {
  if (level < 0 || level > Resolution::kMaxBits) {
    throw std::invalid_argument("DyadicInterval: level out of range");
  }
  if (prefix >= (std::size_t{1} << level)) {
    throw std::invalid_argument("DyadicInterval: prefix out of range for level " +
                                std::to_string(level));
  }
}

double DyadicInterval::measure() const { return std::ldexp(1.0, -level_); }

std::size_t DyadicInterval::first_cell(Resolution res) const {
  if (level_ > res.bits()) {
    throw std::invalid_argument("DyadicInterval: level exceeds resolution");
  }
  return prefix_ << (res.bits() - level_);
}

std::size_t DyadicInterval::cell_count(Resolution res) const {
  if (level_ > res.bits()) {
    throw std::invalid_argument("DyadicInterval: level exceeds resolution");
  }
  return std::size_t{1} << (res.bits() - level_);
}

bool DyadicInterval::contains(const DyadicPoint& x) const {
  if (level_ > x.resolution().bits()) {
    throw std::invalid_argument("DyadicInterval: level exceeds resolution");
  }
  return (x.cell() >> (x.resolution().bits() - level_)) == prefix_;
}

std::pair<DyadicInterval, DyadicInterval> DyadicInterval::children() const {
  return {DyadicInterval(level_ + 1, prefix_ * 2), DyadicInterval(level_ + 1, prefix_ * 2 + 1)};
}

GridFunction::GridFunction(Resolution res, std::vector<double> values)
    : res_(res), values_(std::move(values)) {
  if (values_.size() != res.cells()) {
    throw std::invalid_argument("GridFunction: expected " + std::to_string(res.cells()) +
                                " values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("GridFunction: non-finite value");
  }
}

GridFunction GridFunction::zero(Resolution res) {
  return GridFunction(res, std::vector<double>(res.cells(), 0.0));
}

GridFunction GridFunction::constant(Resolution res, double c) {
  return GridFunction(res, std::vector<double>(res.cells(), c));
}

GridFunction GridFunction::from_cells(Resolution res,
                                      const std::function<double(std::size_t)>& f) {
  std::vector<double> values(res.cells());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = f(j);
  return GridFunction(res, std::move(values));
}

GridFunction GridFunction::indicator(Resolution res, const DyadicInterval& interval) {
  std::vector<double> values(res.cells(), 0.0);
  const std::size_t first = interval.first_cell(res);
  const std::size_t count = interval.cell_count(res);
  std::fill(values.begin() + first, values.begin() + first + count, 1.0);
  return GridFunction(res, std::move(values));
}

namespace {
void require_same_grid(const GridFunction& f, const GridFunction& g, const char* op) {
  if (f.resolution() != g.resolution()) {
    throw std::invalid_argument(std::string(op) + ": resolution mismatch");
  }
}
}  // namespace

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g, "operator+");
  std::vector<double> out(f.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = f[j] + g[j];
  return GridFunction(f.resolution(), std::move(out));
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g, "operator-");
  std::vector<double> out(f.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = f[j] - g[j];
  return GridFunction(f.resolution(), std::move(out));
}

GridFunction operator*(double c, const GridFunction& f) {
  std::vector<double> out(f.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = c * f[j];
  return GridFunction(f.resolution(), std::move(out));
}

double integrate(const GridFunction& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return std::ldexp(sum, -f.resolution().bits());
}

double lp_norm(const GridFunction& f, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  double sum = 0.0;
  for (double v : f.values()) sum += std::pow(std::abs(v), p);
  return std::pow(std::ldexp(sum, -f.resolution().bits()), 1.0 / p);
}

double sup_norm(const GridFunction& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double weak_lp_quasinorm(const GridFunction& f, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("weak_lp_quasinorm: p must be positive");
  // |f| takes finitely many values; as lambda increases towards a value v,
  // mu(|f| > lambda) stays equal to mu(|f| >= v), so the candidates are
  // v * mu(|f| >= v)^(1/p) over the distinct values v > 0.
  std::vector<double> mags(f.size());
  for (std::size_t j = 0; j < mags.size(); ++j) mags[j] = std::abs(f[j]);
  std::sort(mags.begin(), mags.end(), std::greater<double>());

  const int nbits = f.resolution().bits();
  double best = 0.0;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    if (i + 1 < mags.size() && mags[i + 1] == mags[i]) continue;  // not the last of its run
    const double v = mags[i];
    if (v == 0.0) break;
    const double measure = std::ldexp(static_cast<double>(i + 1), -nbits);
    best = std::max(best, v * std::pow(measure, 1.0 / p));
  }
  return best;
}

GridFunction dyadic_convolve(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g, "dyadic_convolve");
  const std::size_t cells = f.size();
  std::vector<double> out(cells, 0.0);
  for (std::size_t x = 0; x < cells; ++x) {
    double sum = 0.0;
    for (std::size_t t = 0; t < cells; ++t) sum += f[t] * g[x ^ t];
    out[x] = std::ldexp(sum, -f.resolution().bits());
  }
  return GridFunction(f.resolution(), std::move(out));
}

}  // namespace walshlab
