// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "test_support.hpp"
#include "walshlab/hardy.hpp"
#include "walshlab/parallel.hpp"
#include "walshlab/signal.hpp"
#include "walshlab/summability.hpp"
#include "walshlab/weights.hpp"

using namespace walshlab;
using testsupport::max_abs;
using testsupport::max_abs_diff;

namespace {

WeightSequence k_plus_1() {
  return WeightSequence([](std::size_t k) { return static_cast<double>(k + 1); },
                        Monotonicity::NonDecreasing, "k_plus_1");
}

// seeded, strictly positive, non-increasing weights
WeightSequence random_monotone_weights(std::uint64_t seed) {
  auto values = std::make_shared<std::vector<double>>();
  values->push_back(1.0 + static_cast<double>(seed % 7));
  return WeightSequence(
      [values, seed](std::size_t k) mutable {
        while (values->size() <= k) {
          const std::size_t i = values->size();
          const double step =
              0.5 / (1.0 + static_cast<double>((seed * 2654435761u + i * 40503u) % 97));
          values->push_back(values->back() / (1.0 + step));
        }
        return (*values)[k];
      },
      Monotonicity::NonIncreasing, "random_monotone");
}

}  // namespace

TEST_SUITE_BEGIN("summability");

TEST_CASE("dirichlet kernel closed form and pointwise values") {
  const Resolution res(5);
  for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
    const GridFunction d4 = dirichlet_kernel(4, system, res);
    const GridFunction expected = 4.0 * GridFunction::indicator(res, DyadicInterval(2, 0));
    CHECK(max_abs_diff(d4, expected) == 0.0);

    CHECK(max_abs(dirichlet_kernel(0, system, res)) == 0.0);

    // D_n(0) = n at the zero cell
    for (std::size_t n = 0; n <= res.cells(); ++n) {
      CHECK(dirichlet_kernel(n, system, res)[0] == static_cast<double>(n));
    }
  }
  CHECK_THROWS_AS(dirichlet_kernel(33, SystemKind::Walsh, res), std::invalid_argument);
}

TEST_CASE("partial sums: empty, dyadic-order, and full") {
  const Resolution res(6);
  const GridFunction f = random_grid_function(res, 41);
  for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
    CHECK(max_abs(partial_sum(f, 0, system)) == 0.0);
    CHECK(max_abs_diff(partial_sum(f, res.cells(), system), f) < 1e-12);
    // S_{2^n} f is the conditional expectation onto level n in both systems
    for (int n = 0; n <= 6; ++n) {
      const GridFunction s = partial_sum(f, std::size_t{1} << n, system);
      CHECK(max_abs_diff(s, condexp(f, n)) < 1e-12);
    }
    CHECK_THROWS_AS(partial_sum(f, res.cells() + 1, system), std::invalid_argument);
  }
}

TEST_CASE("t mean with unit weights is the fejer mean") {
  const Resolution res(6);
  const GridFunction f = random_grid_function(res, 42);
  const auto& unit = MeanFamily::fejer().weights();
  for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
    for (std::size_t n : {1u, 2u, 7u, 32u}) {
      // oracle: average the partial sums directly
      GridFunction acc = GridFunction::zero(res);
      for (std::size_t k = 0; k < n; ++k) acc = acc + partial_sum(f, k, system);
      const GridFunction sigma = (1.0 / static_cast<double>(n)) * acc;
      CHECK(max_abs_diff(t_mean(f, n, unit, system), sigma) < 1e-12);
    }
    // n = 1: only the vanishing S_0 term
    CHECK(max_abs(t_mean(f, 1, unit, system)) == 0.0);
  }
}

TEST_CASE("kernel-mean duality: T_n f equals convolution with the T kernel") {
  const Resolution res(6);
  const GridFunction f = random_grid_function(res, 43);
  const std::vector<WeightSequence> weights = {MeanFamily::fejer().weights(),
                                               MeanFamily::riesz().weights(),
                                               random_monotone_weights(3), k_plus_1()};
  for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
    for (const auto& w : weights) {
      for (std::size_t n = 2; n <= 64; n += 7) {
        if (!(w.Q(n) > 0.0)) continue;
        const GridFunction via_kernel = dyadic_convolve(f, t_kernel(n, w, system, res));
        const GridFunction via_mean = t_mean(f, n, w, system);
        REQUIRE(max_abs_diff(via_kernel, via_mean) < 1e-10);
      }
    }
  }
}

TEST_CASE("norlund mean examples") {
  const Resolution res(6);
  const GridFunction f = random_grid_function(res, 44);
  const SystemKind system = SystemKind::Walsh;

  SUBCASE("unit weights at n = 2 average S_1 and S_2") {
    const GridFunction expected =
        0.5 * (partial_sum(f, 1, system) + partial_sum(f, 2, system));
    CHECK(max_abs_diff(norlund_mean(f, 2, MeanFamily::fejer().weights(), system), expected) <
          1e-12);
  }

  SUBCASE("norlund-log mean matches the literal formula") {
    const auto& w = MeanFamily::norlund_log().weights();
    for (std::size_t n : {4u, 9u, 33u}) {
      double l_n = 0.0;
      GridFunction acc = GridFunction::zero(res);
      for (std::size_t k = 1; k < n; ++k) {
        l_n += 1.0 / static_cast<double>(k);
        acc = acc + (1.0 / static_cast<double>(n - k)) * partial_sum(f, k, system);
      }
      const GridFunction expected = (1.0 / l_n) * acc;
      CHECK(max_abs_diff(norlund_mean(f, n, w, system), expected) < 1e-11);
    }
  }

  SUBCASE("cesaro norlund mean matches the literal A-coefficient sum") {
    const double alpha = 0.5;
    const auto& w = MeanFamily::cesaro(alpha).weights();
    for (std::size_t n : {3u, 10u, 21u}) {
      GridFunction acc = GridFunction::zero(res);
      double total = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        const double a = cesaro_number(alpha - 1.0, n - k);
        total += a;
        acc = acc + a * partial_sum(f, k, system);
      }
      const GridFunction expected = (1.0 / total) * acc;
      CHECK(max_abs_diff(norlund_mean(f, n, w, system), expected) < 1e-11);
    }
  }
}

TEST_CASE("t kernel basics and abel identities") {
  const Resolution res(6);

  SUBCASE("unit weights, n = 2: F_2 = D_1 / 2 = 1/2 everywhere") {
    const GridFunction f2 = t_kernel(2, MeanFamily::fejer().weights(), SystemKind::Walsh, res);
    for (std::size_t j = 0; j < f2.size(); ++j) CHECK(f2[j] == 0.5);
  }

  SUBCASE("undefined means are rejected") {
    CHECK_THROWS_AS(t_kernel(1, MeanFamily::riesz().weights(), SystemKind::Walsh, res),
                    std::invalid_argument);
    CHECK_THROWS_AS(t_mean(random_grid_function(res, 1), 2,
                           MeanFamily::log_b(1.0, 1).weights(), SystemKind::Walsh),
                    std::invalid_argument);
  }

  SUBCASE("abel: weighted kernel sum collapses onto fejer kernels") {
    // Q_n F_n = sum_{j=1}^{n-2} (q_j - q_{j+1}) j K_j + q_{n-1}(n-1) K_{n-1},
    // and the scalar shadow sum_{j>=1} q_j = same expression with K == 1.
    for (std::uint64_t seed : {7u, 8u}) {
      const WeightSequence w = random_monotone_weights(seed);
      for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
        for (std::size_t n = 2; n <= 100; n += 13) {
          std::vector<double> rhs(res.cells(), 0.0);
          double scalar_rhs = w.q(n - 1) * static_cast<double>(n - 1);
          for (std::size_t j = 1; j + 2 <= n; ++j) {
            const double c = (w.q(j) - w.q(j + 1)) * static_cast<double>(j);
            scalar_rhs += c;
            const GridFunction kj = fejer_kernel(j, system, res);
            for (std::size_t x = 0; x < rhs.size(); ++x) rhs[x] += c * kj[x];
          }
          const GridFunction k_last = fejer_kernel(n - 1, system, res);
          const double c_last = w.q(n - 1) * static_cast<double>(n - 1);
          const GridFunction lhs = t_kernel(n, w, system, res);
          const double scale = std::max(1.0, max_abs(lhs));
          for (std::size_t x = 0; x < rhs.size(); ++x) {
            const double rhs_value = (rhs[x] + c_last * k_last[x]) / w.Q(n);
            REQUIRE(std::abs(lhs[x] - rhs_value) / scale < 1e-10);
          }
          REQUIRE(std::abs((w.Q(n) - w.q(0)) - scalar_rhs) <= 1e-12 * w.Q(n));
        }
      }
    }
  }
}

TEST_CASE("fejer kernel identities") {
  const Resolution res(6);
  for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
    // K_1 = D_1 == 1
    CHECK(max_abs_diff(fejer_kernel(1, system, res), GridFunction::constant(res, 1.0)) == 0.0);
    for (std::size_t n = 1; n <= 64; ++n) {
      // K_n(0) = (n+1)/2
      CHECK(fejer_kernel(n, system, res)[0] ==
            doctest::Approx((static_cast<double>(n) + 1.0) / 2.0).epsilon(1e-13));
      // n K_n - (n-1) K_{n-1} = D_n
      if (n >= 2) {
        const GridFunction lhs = static_cast<double>(n) * fejer_kernel(n, system, res) -
                                 static_cast<double>(n - 1) * fejer_kernel(n - 1, system, res);
        CHECK(max_abs_diff(lhs, dirichlet_kernel(n, system, res)) < 1e-10);
      }
    }
  }
}

TEST_CASE("fejer kernel convolution matches the shifted mean") {
  // f * K_j = (1/j) sum_{k=1..j} S_k f, which is the norlund orientation of the
  // unit weights and equals (j+1)/j times the (j+1)-th fejer mean
  const Resolution res(5);
  const GridFunction f = random_grid_function(res, 55);
  const MeanFamily tail = MeanFamily::fejer().with_orientation(MeanOrientation::Norlund);
  for (std::size_t j : {1u, 3u, 8u, 17u}) {
    const GridFunction lhs = dyadic_convolve(f, fejer_kernel(j, SystemKind::Walsh, res));
    const GridFunction rhs = mean(f, j, tail, SystemKind::Walsh);
    CHECK(max_abs_diff(lhs, rhs) < 1e-11);

    const GridFunction sigma = t_mean(f, j + 1, MeanFamily::fejer().weights(), SystemKind::Walsh);
    const GridFunction scaled = (static_cast<double>(j + 1) / static_cast<double>(j)) * sigma;
    CHECK(max_abs_diff(rhs, scaled) < 1e-11);
  }
}

TEST_CASE("maximal operator basics") {
  const Resolution res(6);
  const SystemKind system = SystemKind::Walsh;

  SUBCASE("zero input") {
    CHECK(max_abs(maximal_operator(GridFunction::zero(res), MeanFamily::fejer(), 64, system)) ==
          0.0);
  }

  SUBCASE("constant input under fejer means") {
    // sigma_n 1 = (n-1)/n, so the sweep tops out at (n_max - 1)/n_max
    const GridFunction one = GridFunction::constant(res, 1.0);
    const GridFunction m = maximal_operator(one, MeanFamily::fejer(), res.cells(), system);
    for (std::size_t j = 0; j < m.size(); ++j) {
      REQUIRE(m[j] == doctest::Approx(63.0 / 64.0).epsilon(1e-13));
    }
  }

  SUBCASE("n_max bounds") {
    CHECK_THROWS_AS(maximal_operator(GridFunction::zero(res), MeanFamily::fejer(), 0, system),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        maximal_operator(GridFunction::zero(res), MeanFamily::fejer(), 65, system),
        std::invalid_argument);
  }

  SUBCASE("thread count does not change the result") {
    const GridFunction f = random_grid_function(res, 77);
    set_thread_count(1);
    const GridFunction serial = maximal_operator(f, MeanFamily::riesz(), 64, system);
    set_thread_count(4);
    const GridFunction threaded = maximal_operator(f, MeanFamily::riesz(), 64, system);
    set_thread_count(1);
    CHECK(max_abs_diff(serial, threaded) == 0.0);
  }
}

TEST_CASE("abel majorant chains") {
  const Resolution res(8);
  const SystemKind system = SystemKind::Kaczmarz;
  const std::size_t n_max = 64;
  const MeanFamily tail_fejer = MeanFamily::fejer().with_orientation(MeanOrientation::Norlund);

  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const GridFunction f = random_grid_function(res, seed);
    const GridFunction majorant = maximal_operator(f, tail_fejer, n_max, system);

    // non-increasing families: T* f <= majorant pointwise
    for (const MeanFamily& family :
         {MeanFamily::riesz(), MeanFamily::power_v(0.7), MeanFamily::fejer()}) {
      const GridFunction t_star = maximal_operator(f, family, n_max, system);
      for (std::size_t j = 0; j < t_star.size(); ++j) {
        REQUIRE(t_star[j] <= majorant[j] + 1e-10);
      }
    }

    // non-decreasing families: T* f <= (2C - 1) majorant with the measured C
    for (const MeanFamily& family :
         {MeanFamily::log_b(1.0, 1),
          MeanFamily::custom(k_plus_1(), MeanOrientation::TMean)}) {
      const double c = weight_diagnostics(family.weights(), n_max).node_sup;
      const GridFunction t_star = maximal_operator(f, family, n_max, system);
      for (std::size_t j = 0; j < t_star.size(); ++j) {
        REQUIRE(t_star[j] <= (2.0 * c - 1.0) * majorant[j] + 1e-10);
      }
    }
  }
}

TEST_CASE("band-limited convergence identity is exact") {
  const Resolution res(8);
  const int band_level = 3;  // f is F_3-measurable: 8 leading coefficients
  const GridFunction f = condexp(random_grid_function(res, 91), band_level);
  const std::size_t band = std::size_t{1} << band_level;

  const std::vector<MeanFamily> families = {MeanFamily::fejer(), MeanFamily::riesz(),
                                            MeanFamily::log_b(1.0, 1),
                                            MeanFamily::custom(k_plus_1(), MeanOrientation::TMean)};
  for (const MeanFamily& family : families) {
    const auto& w = family.weights();
    for (std::size_t n = band; n <= res.cells(); n += 37) {
      if (!(w.Q(n) > 0.0)) continue;
      // T_n f - f = (1/Q_n) sum_{k<band} q_k (S_k f - f)
      GridFunction acc = GridFunction::zero(res);
      double early_weight = 0.0;
      double worst_early = 0.0;
      for (std::size_t k = 0; k < band; ++k) {
        const GridFunction defect = partial_sum(f, k, SystemKind::Walsh) - f;
        acc = acc + w.q(k) * defect;
        early_weight += w.q(k);
        worst_early = std::max(worst_early, sup_norm(defect));
      }
      const GridFunction lhs = t_mean(f, n, w, SystemKind::Walsh) - f;
      const GridFunction rhs = (1.0 / w.Q(n)) * acc;
      REQUIRE(max_abs_diff(lhs, rhs) <= 1e-12 * std::max(1.0, max_abs(lhs)));
      // and the sup-norm bound it implies
      REQUIRE(sup_norm(lhs) <= (w.Q(band) / w.Q(n)) * worst_early * (1.0 + 1e-12));
      (void)early_weight;
    }
  }
}

TEST_CASE("mean dispatch honors the orientation") {
  const Resolution res(5);
  const GridFunction f = random_grid_function(res, 101);
  const MeanFamily t_form = MeanFamily::fejer();
  const MeanFamily n_form = t_form.with_orientation(MeanOrientation::Norlund);
  // sigma_n vs the kernel mean differ by the S_0/S_n swap
  const GridFunction a = mean(f, 8, t_form, SystemKind::Walsh);
  const GridFunction b = mean(f, 8, n_form, SystemKind::Walsh);
  CHECK(max_abs_diff(a, b) > 1e-6);
}

TEST_SUITE_END();
