// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include "walshlab/summability.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "walshlab/parallel.hpp"

namespace walshlab {

namespace {

void require_order(std::size_t n, Resolution res, const char* who) {
  if (n > res.cells()) {
    throw std::invalid_argument(std::string(who) + ": order " + std::to_string(n) +
                                " exceeds grid size " + std::to_string(res.cells()));
  }
}

// Everything in this module is a spectral multiplier: the result equals
// sum_i m(i) c_i psi_i with c_i = f_hat^psi(i) for means and c_i = 1 for
// kernels. Synthesis scatters onto Walsh slots (slot rho(i) for the Kaczmarz
// system) and runs one inverse transform.
GridFunction synthesize_scaled(const std::vector<double>& multiplier,
                               const std::vector<double>* system_coeffs, SystemKind system,
                               Resolution res) {
  std::vector<double> walsh_slots(res.cells(), 0.0);
  for (std::size_t i = 0; i < multiplier.size(); ++i) {
    if (multiplier[i] == 0.0) continue;
    const std::size_t slot = system == SystemKind::Walsh ? i : kaczmarz_index_map(i);
    walsh_slots[slot] = system_coeffs ? multiplier[i] * (*system_coeffs)[i] : multiplier[i];
  }
  return GridFunction(res, fwht(std::move(walsh_slots), TransformDirection::Inverse));
}

// T orientation: sum_{k<n} q_k S_k f = sum_{i<=n-2} (Q_n - Q_{i+1}) f_hat(i) psi_i.
std::vector<double> t_multiplier(std::size_t n, const WeightSequence& w) {
  const double total = w.Q(n);
  if (!(total > 0.0)) {
    throw std::invalid_argument("t mean of order " + std::to_string(n) + ": Q_n = 0, undefined");
  }
  std::vector<double> m(n >= 2 ? n - 1 : 0);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = (total - w.Q(i + 1)) / total;
  return m;
}

// Norlund orientation: sum_{k=1}^{n} q_{n-k} S_k f = sum_{i<n} Q_{n-i} f_hat(i) psi_i.
std::vector<double> norlund_multiplier(std::size_t n, const WeightSequence& w) {
  const double total = w.Q(n);
  if (!(total > 0.0)) {
    throw std::invalid_argument("norlund mean of order " + std::to_string(n) +
                                ": Q_n = 0, undefined");
  }
  std::vector<double> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = w.Q(n - i) / total;
  return m;
}

void require_matching(const SpectralCoeffs& coeffs) {
  if (coeffs.coeffs.size() != coeffs.resolution.cells()) {
    throw std::invalid_argument("SpectralCoeffs: coefficient count does not match resolution");
  }
}

}  // namespace

GridFunction dirichlet_kernel(std::size_t n, SystemKind system, Resolution res) {
  require_order(n, res, "dirichlet_kernel");
  std::vector<double> multiplier(n, 1.0);
  return synthesize_scaled(multiplier, nullptr, system, res);
}

GridFunction fejer_kernel(std::size_t n, SystemKind system, Resolution res) {
  if (n < 1) throw std::invalid_argument("fejer_kernel: order must be >= 1");
  require_order(n, res, "fejer_kernel");
  // sum_{k=1}^{n} D_k = sum_{i<n} (n - i) psi_i
  std::vector<double> multiplier(n);
  for (std::size_t i = 0; i < n; ++i) {
    multiplier[i] = static_cast<double>(n - i) / static_cast<double>(n);
  }
  return synthesize_scaled(multiplier, nullptr, system, res);
}

GridFunction t_kernel(std::size_t n, const WeightSequence& w, SystemKind system,
                      Resolution res) {
  if (n < 1) throw std::invalid_argument("t_kernel: order must be >= 1");
  require_order(n, res, "t_kernel");
  return synthesize_scaled(t_multiplier(n, w), nullptr, system, res);
}

GridFunction partial_sum(const SpectralCoeffs& coeffs, std::size_t M) {
  require_matching(coeffs);
  require_order(M, coeffs.resolution, "partial_sum");
  std::vector<double> multiplier(M, 1.0);
  return synthesize_scaled(multiplier, &coeffs.coeffs, coeffs.system, coeffs.resolution);
}

GridFunction partial_sum(const GridFunction& f, std::size_t M, SystemKind system) {
  return partial_sum(fourier_coeffs(f, system), M);
}

GridFunction t_mean(const SpectralCoeffs& coeffs, std::size_t n, const WeightSequence& w) {
  require_matching(coeffs);
  if (n < 1) throw std::invalid_argument("t_mean: order must be >= 1");
  require_order(n, coeffs.resolution, "t_mean");
  return synthesize_scaled(t_multiplier(n, w), &coeffs.coeffs, coeffs.system,
                           coeffs.resolution);
}

GridFunction t_mean(const GridFunction& f, std::size_t n, const WeightSequence& w,
                    SystemKind system) {
  return t_mean(fourier_coeffs(f, system), n, w);
}

GridFunction norlund_mean(const SpectralCoeffs& coeffs, std::size_t n,
                          const WeightSequence& w) {
  require_matching(coeffs);
  if (n < 1) throw std::invalid_argument("norlund_mean: order must be >= 1");
  require_order(n, coeffs.resolution, "norlund_mean");
  return synthesize_scaled(norlund_multiplier(n, w), &coeffs.coeffs, coeffs.system,
                           coeffs.resolution);
}

GridFunction norlund_mean(const GridFunction& f, std::size_t n, const WeightSequence& w,
                          SystemKind system) {
  return norlund_mean(fourier_coeffs(f, system), n, w);
}

GridFunction mean(const SpectralCoeffs& coeffs, std::size_t n, const MeanFamily& family) {
  return family.orientation() == MeanOrientation::TMean
             ? t_mean(coeffs, n, family.weights())
             : norlund_mean(coeffs, n, family.weights());
}

GridFunction mean(const GridFunction& f, std::size_t n, const MeanFamily& family,
                  SystemKind system) {
  return mean(fourier_coeffs(f, system), n, family);
}

GridFunction maximal_operator(const GridFunction& f, const MeanFamily& family,
                              std::size_t n_max, SystemKind system) {
  if (n_max < 1) throw std::invalid_argument("maximal_operator: n_max must be >= 1");
  require_order(n_max, f.resolution(), "maximal_operator");

  const SpectralCoeffs coeffs = fourier_coeffs(f, system);
  const WeightSequence& w = family.weights();
  w.Q(n_max + 1);  // materialize (and monotonicity-check) the whole range up front

  const std::size_t cells = f.resolution().cells();
  std::vector<double> result(cells, 0.0);
  std::mutex merge_mutex;

  parallel_for(n_max, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> local(cells, 0.0);
    bool touched = false;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const std::size_t n = idx + 1;
      if (!(w.Q(n) > 0.0)) continue;  // mean undefined; excluded from the sup
      const GridFunction m = mean(coeffs, n, family);
      for (std::size_t j = 0; j < cells; ++j) {
        local[j] = std::max(local[j], std::abs(m[j]));
      }
      touched = true;
    }
    if (!touched) return;
    // max is exactly commutative, so the merge order cannot change the result
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (std::size_t j = 0; j < cells; ++j) result[j] = std::max(result[j], local[j]);
  });

  return GridFunction(f.resolution(), std::move(result));
}

WeightDiagnostics weight_diagnostics(const WeightSequence& w, std::size_t n_max) {
  if (n_max < 3) throw std::invalid_argument("weight_diagnostics: n_max must be >= 3");
  WeightDiagnostics d;
  d.rows.reserve(n_max);
  d.node_sup = 0.0;
  d.cond1_inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t n = 1; n <= n_max; ++n) {
    WeightDiagnosticsRow row;
    row.n = n;
    row.q_prev = w.q(n - 1);
    row.Q_n = w.Q(n);
    row.ratio_node =
        row.Q_n > 0.0 ? row.q_prev * static_cast<double>(n) / row.Q_n : nan;
    const double q_next = w.q(n + 1);
    const double q_tail = w.Q(n + 2);
    row.ratio_cond1 = q_tail > 0.0 ? q_next * static_cast<double>(n) / q_tail : nan;
    if (!std::isnan(row.ratio_node)) d.node_sup = std::max(d.node_sup, row.ratio_node);
    if (!std::isnan(row.ratio_cond1)) d.cond1_inf = std::min(d.cond1_inf, row.ratio_cond1);
    d.rows.push_back(row);
  }
  return d;
}

}  // namespace walshlab
