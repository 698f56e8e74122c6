// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include "walshlab/selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "walshlab/dyadic.hpp"
#include "walshlab/hardy.hpp"
#include "walshlab/signal.hpp"
#include "walshlab/summability.hpp"
#include "walshlab/systems.hpp"
#include "walshlab/weights.hpp"

namespace walshlab {

namespace {

std::string residual_detail(double worst) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "max residual %.3g", worst);
  return buf;
}

SelfCheckResult check_dirichlet_closed_form() {
  const Resolution res(10);
  double worst = 0.0;
  for (int n = 0; n <= 10; ++n) {
    const std::size_t order = std::size_t{1} << n;
    const GridFunction expected =
        std::ldexp(1.0, n) * GridFunction::indicator(res, DyadicInterval(n, 0));
    for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
      const GridFunction d = dirichlet_kernel(order, system, res);
      for (std::size_t j = 0; j < d.size(); ++j) {
        worst = std::max(worst, std::abs(d[j] - expected[j]));
      }
    }
  }
  return {"dirichlet dyadic closed form (N=10, n<=10, both systems, exact)", worst == 0.0,
          residual_detail(worst)};
}

std::vector<MeanFamily> identity_families() {
  return {MeanFamily::fejer(),
          MeanFamily::riesz(),
          MeanFamily::cesaro(0.5),
          MeanFamily::power_v(0.7),
          MeanFamily::log_b(1.0, 1),
          MeanFamily::custom(
              WeightSequence([](std::size_t k) { return static_cast<double>(k + 1); },
                             Monotonicity::NonDecreasing, "k_plus_1"),
              MeanOrientation::TMean)};
}

// Summation by parts on the weights alone. The j = 0 term carries the factor
// j and vanishes, so the sum reproduces the q_0-free tail of Q_n:
//   sum_{j=1}^{n-1} q_j = sum_{j=1}^{n-2} (q_j - q_{j+1}) j + q_{n-1}(n-1).
SelfCheckResult check_abel_weight_identity() {
  double worst = 0.0;
  for (const MeanFamily& family : identity_families()) {
    const WeightSequence& w = family.weights();
    for (std::size_t n = 2; n <= 128; ++n) {
      double rhs = w.q(n - 1) * static_cast<double>(n - 1);
      for (std::size_t j = 1; j + 2 <= n; ++j) {
        rhs += (w.q(j) - w.q(j + 1)) * static_cast<double>(j);
      }
      const double lhs = w.Q(n) - w.q(0);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
  }
  return {"abel weight identity (6 families, n<=128, rel 1e-12)", worst <= 1e-12,
          residual_detail(worst)};
}

SelfCheckResult check_abel_kernel_identity() {
  const Resolution res(7);
  double worst = 0.0;
  for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
    std::vector<GridFunction> fejer;  // fejer[j] = K_{j+1}
    for (std::size_t j = 1; j <= 127; ++j) fejer.push_back(fejer_kernel(j, system, res));
    for (const MeanFamily& family : identity_families()) {
      const WeightSequence& w = family.weights();
      std::vector<double> inner(res.cells(), 0.0);  // sum_{j=1}^{n-2} (q_j - q_{j+1}) j K_j
      for (std::size_t n = 2; n <= 128; ++n) {
        if (n >= 3) {
          const std::size_t j = n - 2;
          const double c = (w.q(j) - w.q(j + 1)) * static_cast<double>(j);
          const GridFunction& k_j = fejer[j - 1];
          for (std::size_t x = 0; x < inner.size(); ++x) inner[x] += c * k_j[x];
        }
        if (!(w.Q(n) > 0.0)) continue;
        const GridFunction lhs = t_kernel(n, w, system, res);
        const GridFunction& k_last = fejer[n - 2];
        const double c_last = w.q(n - 1) * static_cast<double>(n - 1);
        double scale = 1.0;
        for (std::size_t x = 0; x < inner.size(); ++x) scale = std::max(scale, std::abs(lhs[x]));
        for (std::size_t x = 0; x < inner.size(); ++x) {
          const double rhs = (inner[x] + c_last * k_last[x]) / w.Q(n);
          worst = std::max(worst, std::abs(lhs[x] - rhs) / scale);
        }
      }
    }
  }
  return {"abel kernel identity (6 families, n<=128, both systems, N=7, 1e-10)", worst <= 1e-10,
          residual_detail(worst)};
}

SelfCheckResult check_orthonormality() {
  const Resolution res(6);
  double worst = 0.0;
  for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
    std::vector<GridFunction> basis;
    for (std::size_t n = 0; n < 64; ++n) basis.push_back(system_function(system, n, res));
    for (std::size_t m = 0; m < 64; ++m) {
      for (std::size_t n = m; n < 64; ++n) {
        double sum = 0.0;
        for (std::size_t j = 0; j < res.cells(); ++j) sum += basis[m][j] * basis[n][j];
        const double inner = std::ldexp(sum, -res.bits());
        worst = std::max(worst, std::abs(inner - (m == n ? 1.0 : 0.0)));
      }
    }
  }
  return {"orthonormality (m,n<64, N=6, both systems, exact)", worst == 0.0,
          residual_detail(worst)};
}

SelfCheckResult check_index_map() {
  for (std::uint64_t n = 0; n < (1u << 16); ++n) {
    const std::uint64_t r = kaczmarz_index_map(n);
    if (kaczmarz_index_map(r) != n) {
      return {"kaczmarz index map involution (n<2^16)", false,
              "rho(rho(" + std::to_string(n) + ")) != n"};
    }
    if (n >= 1 && msb_index(r) != msb_index(n)) {
      return {"kaczmarz index map involution (n<2^16)", false,
              "rho left the dyadic block at n=" + std::to_string(n)};
    }
  }
  return {"kaczmarz index map involution and block preservation (n<2^16)", true, "ok"};
}

SelfCheckResult check_kaczmarz_equivalence() {
  const Resolution res(8);
  for (std::uint64_t n = 0; n < 256; ++n) {
    const std::uint64_t r = kaczmarz_index_map(n);
    for (std::size_t j = 0; j < res.cells(); ++j) {
      const DyadicPoint x(res, j);
      if (kaczmarz(n, x) != walsh(r, x)) {
        return {"kappa_n == w_rho(n) (n<256, N=8)", false,
                "mismatch at n=" + std::to_string(n) + " cell=" + std::to_string(j)};
      }
    }
  }
  return {"kappa_n == w_rho(n) (n<256, N=8)", true, "ok"};
}

SelfCheckResult check_transform() {
  const Resolution res(10);
  double worst_rt = 0.0;
  double worst_parseval = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GridFunction f = random_grid_function(res, seed);
    for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
      const SpectralCoeffs coeffs = fourier_coeffs(f, system);
      const GridFunction back = synthesize(coeffs);
      for (std::size_t j = 0; j < f.size(); ++j) {
        worst_rt = std::max(worst_rt, std::abs(back[j] - f[j]));
      }
      double energy = 0.0;
      for (double c : coeffs.coeffs) energy += c * c;
      const double l2 = lp_norm(f, 2.0);
      worst_parseval = std::max(worst_parseval, std::abs(energy - l2 * l2));
    }
  }
  const bool pass = worst_rt <= 1e-12 && worst_parseval <= 1e-10;
  return {"transform round trip (1e-12) and Parseval (1e-10), N=10", pass,
          residual_detail(std::max(worst_rt, worst_parseval))};
}

}  // namespace

std::vector<SelfCheckResult> run_selfcheck() {
  return {check_dirichlet_closed_form(), check_abel_weight_identity(),
          check_abel_kernel_identity(),  check_orthonormality(),
          check_index_map(),             check_kaczmarz_equivalence(),
          check_transform()};
}

}  // namespace walshlab
