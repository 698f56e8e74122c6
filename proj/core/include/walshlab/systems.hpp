// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#ifndef WALSHLAB_SYSTEMS_HPP
#define WALSHLAB_SYSTEMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "walshlab/dyadic.hpp"

namespace walshlab {

enum class SystemKind { Walsh, Kaczmarz };

std::string to_string(SystemKind system);
SystemKind system_from_string(const std::string& name);

/// r_k(x) = (-1)^{x_k}. Requires k < N.
int rademacher(int k, const DyadicPoint& x);

/// Index of the highest set bit: 2^msb_index(n) <= n < 2^(msb_index(n)+1).
/// Requires n >= 1.
int msb_index(std::uint64_t n);

/// Reverses the low `bits` bits of v.
std::uint64_t reverse_bits(std::uint64_t v, int bits);

/// Walsh-Paley function w_n(x) = product of r_k(x) over set bits k of n.
/// Requires n < 2^N.
int walsh(std::uint64_t n, const DyadicPoint& x);

/// Index permutation rho with kaczmarz(n, .) == walsh(rho(n), .).
/// rho(0) = 0; for n >= 1,
///   rho(n) = 2^|n| + reverse_bits(n - 2^|n|, |n|).
/// rho maps each block [2^s, 2^(s+1)) onto itself and is an involution.
std::uint64_t kaczmarz_index_map(std::uint64_t n);

/// Walsh-Kaczmarz function, evaluated from its literal product definition
///   kappa_n(x) = r_|n|(x) * prod_{k<|n|} r_{|n|-1-k}(x)^{n_k}.
/// Requires n < 2^N.
int kaczmarz(std::uint64_t n, const DyadicPoint& x);

/// psi_n sampled over the whole grid (psi = w or kappa).
GridFunction system_function(SystemKind system, std::uint64_t n, Resolution res);

enum class TransformDirection { Forward, Inverse };

/// Fast Walsh-Hadamard transform in the Paley ordering that matches the
/// interval-contiguous cell layout: a bit-reversal permutation around the
/// standard Sylvester butterfly, O(N 2^N).
///
/// Forward:  c[i] = 2^(-N) * sum_j f(j) w_i(cell j)   (integrals against mu)
/// Inverse:  f(j) = sum_i c[i] w_i(cell j)
///
/// Requires a power-of-two length. Output is bit-identical for any thread
/// count: every element is formed by the same fixed butterfly expression.
std::vector<double> fwht(std::vector<double> values, TransformDirection direction);

/// Fourier coefficients of f in the given system. coeffs[i] = f_hat(i).
struct SpectralCoeffs {
  Resolution resolution;
  SystemKind system;
  std::vector<double> coeffs;
};

SpectralCoeffs fourier_coeffs(const GridFunction& f, SystemKind system);

/// Reconstructs sum_i coeffs[i] * psi_i from a full coefficient vector.
GridFunction synthesize(const SpectralCoeffs& coeffs);

}  // namespace walshlab

#endif
