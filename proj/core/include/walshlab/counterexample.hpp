// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#ifndef WALSHLAB_COUNTEREXAMPLE_HPP
#define WALSHLAB_COUNTEREXAMPLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "walshlab/dyadic.hpp"
#include "walshlab/hardy.hpp"
#include "walshlab/systems.hpp"
#include "walshlab/weights.hpp"

namespace walshlab {

/// The lacunary-atom martingale: exponent p, gap sequence alpha_0 < alpha_1 < ...
/// and the number of retained terms K = alphas.size(). The k-th building block is
///   a_k = 2^{alpha_k (1/p - 1)} (D_{2^{alpha_k + 1}} - D_{2^{alpha_k}}),
/// attached with coefficient lambda_k = 1/alpha_k.
struct CounterexampleSpec {
  double p;                 // 0 < p < 1/2
  std::vector<int> alphas;  // strictly increasing positive integers

  std::size_t terms() const { return alphas.size(); }
};

/// One gap-condition evaluation, carried in log2 space so that large
/// alpha/p combinations never overflow. margin = rhs_log2 - lhs_log2;
/// the condition holds iff margin > 0.
struct GapCheck {
  int k;
  double lhs_log2;
  double rhs_log2;
  double margin_log2;
  bool ok;
};

struct AlphaValidation {
  bool ok;
  std::string reason;              // first structural failure, empty if none
  double sum_inv_alpha_p;          // partial sum of 1/alpha_k^p (finite-K view)
  std::vector<GapCheck> separation;  // sum_{h<k} 2^{a_h/p}/a_h < 2^{a_k/p - 1}/(2 a_k)
  std::vector<GapCheck> growth;      // 2^{a_{k-1}(1/p-1)}/a_{k-1} < 2^{a_k(1/p-1)-4}/a_k
};

/// Evaluates the gap conditions for every k in [1, K-1]. Structural defects
/// (p out of range, non-increasing alphas, K < 2) are reported, not raised.
AlphaValidation validate_alphas(const CounterexampleSpec& spec);

/// Walsh coefficients the construction must produce: constant
/// 2^{alpha_k (1/p - 1)} / alpha_k on each block [2^{alpha_k}, 2^{alpha_k + 1}),
/// zero elsewhere. The Kaczmarz coefficients coincide because the index
/// permutation maps each block onto itself and the pattern is blockwise constant.
std::vector<double> counterexample_spectrum(const CounterexampleSpec& spec, Resolution res);

/// The building block lambda-free atom a_k, certified as a p-atom on I_{alpha_k}(0).
Atom counterexample_atom(const CounterexampleSpec& spec, std::size_t k, Resolution res);

/// sum_k lambda_k a_k on the grid. Requires alphas.back() + 1 <= N and a
/// passing validation.
GridFunction build_counterexample(const CounterexampleSpec& spec, Resolution res);

struct DivergenceRow {
  int k;
  int alpha_k;
  std::size_t n_k;         // 2^{alpha_k} + 2
  double min_abs_t;        // min over the grid of |T^kappa_{n_k} f|
  double paper_bound;      // 2^{alpha_k (1/p - 2)} / (16 alpha_k)
  double weak_quasinorm;   // || T^kappa_{n_k} f ||_{L_{p,infty}}
  double hardy_norm;       // || f ||_{H_p}
  double ratio;            // weak_quasinorm / hardy_norm
};

struct DivergenceReport {
  std::vector<DivergenceRow> rows;       // in k order
  Monotonicity weight_class;             // hypothesis set the weights satisfy
  double cond1_constant;                 // inf q_{n+1} n / Q_{n+2} (NaN for non-decreasing)
};

/// Evaluates the blow-up mechanism at n_k = 2^{alpha_k} + 2 for every k.
/// Requires a validated spec and weights declared non-decreasing, or
/// non-increasing (the cond1 constant is measured and reported).
DivergenceReport divergence_experiment(const CounterexampleSpec& spec, const WeightSequence& w,
                                       Resolution res);

}  // namespace walshlab

#endif
