// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include "walshlab/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "walshlab/parallel.hpp"
#include "walshlab/summability.hpp"

namespace walshlab {

namespace {

// log2 of a sum of powers given as exponents: log2(sum_i 2^{e_i}).
double log2_sum_exp2(const std::vector<double>& exponents) {
  double top = -std::numeric_limits<double>::infinity();
  for (double e : exponents) top = std::max(top, e);
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (double e : exponents) acc += std::exp2(e - top);
  return top + std::log2(acc);
}

std::string structural_defect(const CounterexampleSpec& spec) {
  if (!(spec.p > 0.0 && spec.p < 0.5)) return "p must lie in (0, 1/2)";
  if (spec.alphas.size() < 2) return "need at least two alpha terms";
  if (spec.alphas.front() < 1) return "alphas must be positive";
  for (std::size_t k = 1; k < spec.alphas.size(); ++k) {
    if (spec.alphas[k] <= spec.alphas[k - 1]) {
      return "alphas must be strictly increasing (violated at index " + std::to_string(k) + ")";
    }
  }
  return "";
}

void require_resolution(const CounterexampleSpec& spec, Resolution res) {
  if (!spec.alphas.empty() && spec.alphas.back() + 1 > res.bits()) {
    throw std::invalid_argument("counterexample: needs resolution >= " +
                                std::to_string(spec.alphas.back() + 1) + ", got " +
                                std::to_string(res.bits()));
  }
}

}  // namespace

AlphaValidation validate_alphas(const CounterexampleSpec& spec) {
  AlphaValidation v;
  v.reason = structural_defect(spec);
  v.ok = v.reason.empty();
  v.sum_inv_alpha_p = 0.0;
  for (int a : spec.alphas) {
    if (a >= 1) v.sum_inv_alpha_p += std::pow(static_cast<double>(a), -spec.p);
  }
  if (!v.ok) return v;

  const double inv_p = 1.0 / spec.p;
  std::vector<double> prefix_exponents;  // alpha_h / p - log2(alpha_h) for h < k
  for (std::size_t k = 1; k < spec.alphas.size(); ++k) {
    const double a_prev = spec.alphas[k - 1];
    const double a_k = spec.alphas[k];
    prefix_exponents.push_back(a_prev * inv_p - std::log2(a_prev));

    GapCheck sep;
    sep.k = static_cast<int>(k);
    sep.lhs_log2 = log2_sum_exp2(prefix_exponents);
    sep.rhs_log2 = a_k * inv_p - 2.0 - std::log2(a_k);  // 2^{a_k/p - 1} / (2 a_k)
    sep.margin_log2 = sep.rhs_log2 - sep.lhs_log2;
    sep.ok = sep.margin_log2 > 0.0;
    v.separation.push_back(sep);

    GapCheck gro;
    gro.k = static_cast<int>(k);
    gro.lhs_log2 = a_prev * (inv_p - 1.0) - std::log2(a_prev);
    gro.rhs_log2 = a_k * (inv_p - 1.0) - 4.0 - std::log2(a_k);
    gro.margin_log2 = gro.rhs_log2 - gro.lhs_log2;
    gro.ok = gro.margin_log2 > 0.0;
    v.growth.push_back(gro);

    v.ok = v.ok && sep.ok && gro.ok;
  }
  if (!v.ok && v.reason.empty()) v.reason = "gap conditions failed";
  return v;
}

std::vector<double> counterexample_spectrum(const CounterexampleSpec& spec, Resolution res) {
  require_resolution(spec, res);
  std::vector<double> coeffs(res.cells(), 0.0);
  for (std::size_t k = 0; k < spec.alphas.size(); ++k) {
    const int alpha = spec.alphas[k];
    const double value =
        std::exp2(alpha * (1.0 / spec.p - 1.0)) / static_cast<double>(alpha);
    const std::size_t lo = std::size_t{1} << alpha;
    for (std::size_t j = lo; j < lo * 2; ++j) coeffs[j] = value;
  }
  return coeffs;
}

Atom counterexample_atom(const CounterexampleSpec& spec, std::size_t k, Resolution res) {
  if (k >= spec.alphas.size()) throw std::invalid_argument("counterexample_atom: k out of range");
  require_resolution(spec, res);
  const int alpha = spec.alphas[k];
  const double scale = std::exp2(alpha * (1.0 / spec.p - 1.0));
  // The dyadic-order Dirichlet kernels coincide in both systems, so the block
  // is system-agnostic.
  const GridFunction block =
      dirichlet_kernel(std::size_t{1} << (alpha + 1), SystemKind::Walsh, res) -
      dirichlet_kernel(std::size_t{1} << alpha, SystemKind::Walsh, res);
  return Atom::certified(scale * block, spec.p, DyadicInterval(alpha, 0));
}

GridFunction build_counterexample(const CounterexampleSpec& spec, Resolution res) {
  if (spec.alphas.empty()) return GridFunction::zero(res);
  if (spec.alphas.size() >= 2) {
    const AlphaValidation v = validate_alphas(spec);
    if (!v.ok) {
      throw std::invalid_argument("build_counterexample: validation failed: " + v.reason);
    }
  } else if (!(spec.p > 0.0 && spec.p < 0.5) || spec.alphas.front() < 1) {
    throw std::invalid_argument("build_counterexample: p must lie in (0, 1/2) and alphas be positive");
  }
  require_resolution(spec, res);

  GridFunction f = GridFunction::zero(res);
  for (std::size_t k = 0; k < spec.alphas.size(); ++k) {
    const double lambda = 1.0 / static_cast<double>(spec.alphas[k]);
    f = f + lambda * counterexample_atom(spec, k, res).values;
  }
  return f;
}

DivergenceReport divergence_experiment(const CounterexampleSpec& spec, const WeightSequence& w,
                                       Resolution res) {
  const AlphaValidation v = validate_alphas(spec);
  if (!v.ok) {
    throw std::invalid_argument("divergence_experiment: spec validation failed: " + v.reason);
  }
  require_resolution(spec, res);
  if (w.monotonicity() == Monotonicity::None) {
    throw std::invalid_argument(
        "divergence_experiment: weights must declare a monotonicity class");
  }

  DivergenceReport report;
  report.weight_class = w.monotonicity();
  report.cond1_constant = std::numeric_limits<double>::quiet_NaN();

  const std::size_t n_top = (std::size_t{1} << spec.alphas.back()) + 2;
  if (w.monotonicity() == Monotonicity::NonIncreasing) {
    report.cond1_constant = weight_diagnostics(w, n_top).cond1_inf;
  }

  const GridFunction f = build_counterexample(spec, res);
  const double h_norm = hardy_norm(f, spec.p);
  const SpectralCoeffs coeffs = fourier_coeffs(f, SystemKind::Kaczmarz);

  report.rows.resize(spec.alphas.size());
  parallel_for(spec.alphas.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const int alpha = spec.alphas[k];
      DivergenceRow row;
      row.k = static_cast<int>(k);
      row.alpha_k = alpha;
      row.n_k = (std::size_t{1} << alpha) + 2;
      const GridFunction t = t_mean(coeffs, row.n_k, w);
      double lo_abs = std::numeric_limits<double>::infinity();
      for (double value : t.values()) lo_abs = std::min(lo_abs, std::abs(value));
      row.min_abs_t = lo_abs;
      row.paper_bound =
          std::exp2(alpha * (1.0 / spec.p - 2.0)) / (16.0 * static_cast<double>(alpha));
      row.weak_quasinorm = weak_lp_quasinorm(t, spec.p);
      row.hardy_norm = h_norm;
      row.ratio = row.weak_quasinorm / h_norm;
      report.rows[k] = row;
    }
  });

  return report;
}

}  // namespace walshlab
