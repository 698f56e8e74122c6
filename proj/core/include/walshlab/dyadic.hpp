// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#ifndef WALSHLAB_DYADIC_HPP
#define WALSHLAB_DYADIC_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace walshlab {

/// Number of dyadic coordinates retained; the grid has 2^N cells.
class Resolution {
 public:
  explicit Resolution(int n_bits);

  int bits() const { return bits_; }
  std::size_t cells() const { return std::size_t{1} << bits_; }

  friend bool operator==(Resolution a, Resolution b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Resolution a, Resolution b) { return a.bits_ != b.bits_; }

  static constexpr int kMaxBits = 30;

 private:
  int bits_;
};

/// A point of the truncated dyadic group, identified with one grid cell.
///
/// Coordinate x_k sits at bit N-1-k of the cell index, so fixing the first
/// n coordinates selects a contiguous run of 2^(N-n) cells.
class DyadicPoint {
 public:
  DyadicPoint(Resolution res, std::size_t cell_index);

  Resolution resolution() const { return res_; }
  std::size_t cell() const { return cell_; }

  /// Coordinate x_k, in {0, 1}. Requires 0 <= k < N.
  int coordinate(int k) const;

  friend bool operator==(const DyadicPoint& a, const DyadicPoint& b) {
    return a.res_ == b.res_ && a.cell_ == b.cell_;
  }

 private:
  Resolution res_;
  std::size_t cell_;
};

/// Coordinate-wise mod-2 sum; the group operation. Requires equal resolutions.
DyadicPoint xor_add(const DyadicPoint& x, const DyadicPoint& y);

/// Dyadic interval: the set of points agreeing with a fixed prefix of
/// `level` coordinates. Haar measure 2^(-level).
class DyadicInterval {
 public:
  DyadicInterval(int level, std::size_t prefix);

  int level() const { return level_; }
  std::size_t prefix() const { return prefix_; }
  double measure() const;

  std::size_t first_cell(Resolution res) const;
  std::size_t cell_count(Resolution res) const;
  bool contains(const DyadicPoint& x) const;

  std::pair<DyadicInterval, DyadicInterval> children() const;

  friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
    return a.level_ == b.level_ && a.prefix_ == b.prefix_;
  }

 private:
  int level_;
  std::size_t prefix_;
};

/// Real-valued function on the grid: one value per level-N cell, in the
/// interval-contiguous cell order. Immutable after construction; instances
/// may be shared across threads freely.
class GridFunction {
 public:
  GridFunction(Resolution res, std::vector<double> values);

  static GridFunction zero(Resolution res);
  static GridFunction constant(Resolution res, double c);
  static GridFunction from_cells(Resolution res, const std::function<double(std::size_t)>& f);
  static GridFunction indicator(Resolution res, const DyadicInterval& interval);

  Resolution resolution() const { return res_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t cell) const { return values_[cell]; }
  const std::vector<double>& values() const { return values_; }

 private:
  Resolution res_;
  std::vector<double> values_;
};

GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator-(const GridFunction& f, const GridFunction& g);
GridFunction operator*(double c, const GridFunction& f);

/// Integral against the normalized Haar measure: 2^(-N) * sum of cell values.
double integrate(const GridFunction& f);

/// (integral of |f|^p)^(1/p). Requires p > 0.
double lp_norm(const GridFunction& f, double p);

/// max |f|.
double sup_norm(const GridFunction& f);

/// sup over lambda > 0 of lambda * mu(|f| > lambda)^(1/p), computed exactly:
/// grid functions are simple, so the sup is attained as lambda approaches one
/// of the finitely many values of |f| from below. Requires p > 0.
double weak_lp_quasinorm(const GridFunction& f, double p);

/// Dyadic convolution (f * g)(x) = integral of f(t) g(x xor t) dmu(t).
/// Direct O(4^N) sum; intended for oracle-grade cross-checks at small N.
GridFunction dyadic_convolve(const GridFunction& f, const GridFunction& g);

}  // namespace walshlab

#endif
