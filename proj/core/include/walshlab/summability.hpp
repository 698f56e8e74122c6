// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#ifndef WALSHLAB_SUMMABILITY_HPP
#define WALSHLAB_SUMMABILITY_HPP

#include <cstddef>
#include <vector>

#include "walshlab/dyadic.hpp"
#include "walshlab/systems.hpp"
#include "walshlab/weights.hpp"

namespace walshlab {

/// Dirichlet kernel D_n = psi_0 + ... + psi_{n-1}; D_0 = 0. Requires n <= 2^N.
GridFunction dirichlet_kernel(std::size_t n, SystemKind system, Resolution res);

/// Fejer kernel K_n = (1/n)(D_1 + ... + D_n). Requires 1 <= n <= 2^N.
GridFunction fejer_kernel(std::size_t n, SystemKind system, Resolution res);

/// T kernel F_n = (1/Q_n) sum_{k<n} q_k D_k. Requires Q_n > 0, n <= 2^N.
GridFunction t_kernel(std::size_t n, const WeightSequence& w, SystemKind system,
                      Resolution res);

/// Partial sum S_M f = sum_{i<M} f_hat(i) psi_i. S_0 f = 0, S_{2^N} f = f.
GridFunction partial_sum(const GridFunction& f, std::size_t M, SystemKind system);
GridFunction partial_sum(const SpectralCoeffs& coeffs, std::size_t M);

/// T mean T_n f = (1/Q_n) sum_{k=0}^{n-1} q_k S_k f. Requires Q_n > 0, n <= 2^N.
GridFunction t_mean(const GridFunction& f, std::size_t n, const WeightSequence& w,
                    SystemKind system);
GridFunction t_mean(const SpectralCoeffs& coeffs, std::size_t n, const WeightSequence& w);

/// Norlund mean t_n f = (1/Q_n) sum_{k=1}^{n} q_{n-k} S_k f. Same preconditions.
GridFunction norlund_mean(const GridFunction& f, std::size_t n, const WeightSequence& w,
                          SystemKind system);
GridFunction norlund_mean(const SpectralCoeffs& coeffs, std::size_t n,
                          const WeightSequence& w);

/// n-th mean of the family in its orientation.
GridFunction mean(const GridFunction& f, std::size_t n, const MeanFamily& family,
                  SystemKind system);
GridFunction mean(const SpectralCoeffs& coeffs, std::size_t n, const MeanFamily& family);

/// Maximal operator: pointwise max of |mean_n f| over n in [1, n_max].
/// Indices with Q_n = 0 (mean undefined) do not participate in the sup.
/// Result is independent of the thread count. Requires 1 <= n_max <= 2^N.
GridFunction maximal_operator(const GridFunction& f, const MeanFamily& family,
                              std::size_t n_max, SystemKind system);

struct WeightDiagnosticsRow {
  std::size_t n;
  double q_prev;       // q_{n-1}
  double Q_n;
  double ratio_node;   // q_{n-1} n / Q_n      (NaN while Q_n = 0)
  double ratio_cond1;  // q_{n+1} n / Q_{n+2}  (NaN while Q_{n+2} = 0)
};

struct WeightDiagnostics {
  std::vector<WeightDiagnosticsRow> rows;  // n = 1..n_max
  double node_sup;    // sup of ratio_node over finite rows; the O(1/n) constant
  double cond1_inf;   // inf of ratio_cond1 over finite rows
};

/// Requires n_max >= 3.
WeightDiagnostics weight_diagnostics(const WeightSequence& w, std::size_t n_max);

}  // namespace walshlab

#endif
