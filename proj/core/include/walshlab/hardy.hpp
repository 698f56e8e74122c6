// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#ifndef WALSHLAB_HARDY_HPP
#define WALSHLAB_HARDY_HPP

#include "walshlab/dyadic.hpp"

namespace walshlab {

/// Conditional expectation onto the level-n dyadic algebra: constant on each
/// level-n interval, equal to the interval average. condexp(f, N) = f,
/// condexp(f, 0) = integrate(f). Requires 0 <= n <= N.
GridFunction condexp(const GridFunction& f, int level);

/// true iff condexp(f, level) == f, i.e. f is constant on level intervals.
bool is_level_measurable(const GridFunction& f, int level);

/// Martingale maximal function f* = max over n in [0, N] of |condexp(f, n)|.
GridFunction maximal_function(const GridFunction& f);

/// ||f||_{H_p} = ||f*||_p. A quasi-norm for p < 1. Requires p > 0.
double hardy_norm(const GridFunction& f, double p);

/// Per-condition p-atom diagnostics. Tolerances are relative to the scale
/// of a: tol = 1e-12 * max(1, sup|a|).
struct AtomReport {
  bool mean_ok;
  bool size_ok;
  bool support_ok;
  double measured_mean;  // integral of a over I
  double measured_sup;   // sup |a|
  double bound;          // mu(I)^(-1/p)
  bool ok() const { return mean_ok && size_ok && support_ok; }
};

/// Checks supp(a) in I, integral_I a dmu = 0 and sup|a| <= mu(I)^(-1/p).
/// Failures are reported, not raised. Requires p > 0.
AtomReport is_p_atom(const GridFunction& a, double p, const DyadicInterval& interval);

/// A certified p-atom together with its supporting interval.
struct Atom {
  DyadicInterval support;
  GridFunction values;

  /// Validates via is_p_atom; throws std::invalid_argument when a condition fails.
  static Atom certified(GridFunction values, double p, const DyadicInterval& interval);
};

}  // namespace walshlab

#endif
