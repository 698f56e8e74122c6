// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#ifndef WALSHLAB_SELFCHECK_HPP
#define WALSHLAB_SELFCHECK_HPP

#include <string>
#include <vector>

namespace walshlab {

struct SelfCheckResult {
  std::string name;
  bool pass;
  std::string detail;  // worst residual / counterexample location
};

/// The exact-identity suite behind `walshlab selfcheck`:
///   - dyadic Dirichlet closed form, both systems, N = 10, n <= 10
///   - Abel weight identity and the kernel identity for the built-in
///     families, n <= 128, both systems, N = 7
///   - orthonormality of both systems, all m, n < 64 at N = 6
///   - involution and block preservation of the Kaczmarz index map, n < 2^16
///   - kappa_n == w_rho(n) pointwise for n < 256 at N = 8
///   - transform round trip and Parseval on seeded noise at N = 10
std::vector<SelfCheckResult> run_selfcheck();

}  // namespace walshlab

#endif
