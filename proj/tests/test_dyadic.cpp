// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "test_support.hpp"
#include "walshlab/dyadic.hpp"
#include "walshlab/signal.hpp"
#include "walshlab/summability.hpp"
#include "walshlab/systems.hpp"

using namespace walshlab;
using testsupport::max_abs_diff;

TEST_SUITE_BEGIN("dyadic");

TEST_CASE("resolution bounds") {
  CHECK_THROWS_AS(Resolution(0), std::invalid_argument);
  CHECK_THROWS_AS(Resolution(31), std::invalid_argument);
  CHECK(Resolution(10).cells() == 1024);
}

TEST_CASE("xor_add examples") {
  const Resolution res(4);
  const DyadicPoint zero(res, 0);
  const DyadicPoint x(res, 0b0110);
  const DyadicPoint y(res, 0b0101);
  CHECK(xor_add(x, zero) == x);
  CHECK(xor_add(x, x) == zero);
  CHECK(xor_add(x, y).cell() == 0b0011);
  CHECK_THROWS_AS(xor_add(x, DyadicPoint(Resolution(5), 0)), std::invalid_argument);
}

TEST_CASE("xor_add group laws, exhaustive") {
  // commutativity/associativity/self-inverse over all triples at N=4,
  // and over a full sweep at N=8
  for (int nbits : {4, 8}) {
    const Resolution res(nbits);
    const std::size_t cells = res.cells();
    for (std::size_t a = 0; a < cells; ++a) {
      for (std::size_t b = 0; b < cells; ++b) {
        REQUIRE((a ^ b) == (b ^ a));
        if (nbits <= 4) {
          for (std::size_t c = 0; c < cells; ++c) {
            REQUIRE(((a ^ b) ^ c) == (a ^ (b ^ c)));
          }
        }
      }
      REQUIRE((a ^ a) == 0);
      REQUIRE((a ^ 0) == a);
    }
    // spot-check associativity through the typed API at N=8
    if (nbits == 8) {
      for (std::size_t a = 0; a < cells; a += 17) {
        for (std::size_t b = 0; b < cells; b += 13) {
          for (std::size_t c = 0; c < cells; c += 11) {
            const DyadicPoint pa(res, a), pb(res, b), pc(res, c);
            REQUIRE(xor_add(xor_add(pa, pb), pc) == xor_add(pa, xor_add(pb, pc)));
          }
        }
      }
    }
  }
}

TEST_CASE("dyadic interval structure") {
  const Resolution res(5);
  const DyadicInterval i2(2, 1);
  CHECK(i2.measure() == 0.25);
  CHECK(i2.first_cell(res) == 8);
  CHECK(i2.cell_count(res) == 8);
  const auto [left, right] = i2.children();
  CHECK(left.level() == 3);
  CHECK(left.first_cell(res) + left.cell_count(res) == right.first_cell(res));
  CHECK(left.cell_count(res) + right.cell_count(res) == i2.cell_count(res));
  CHECK(i2.contains(DyadicPoint(res, 9)));
  CHECK_FALSE(i2.contains(DyadicPoint(res, 16)));
  CHECK_THROWS_AS(DyadicInterval(2, 4), std::invalid_argument);

  // same-level intervals partition the group
  std::size_t covered = 0;
  for (std::size_t p = 0; p < 4; ++p) covered += DyadicInterval(2, p).cell_count(res);
  CHECK(covered == res.cells());
}

TEST_CASE("integrate examples") {
  const Resolution res(4);
  CHECK(integrate(GridFunction::constant(res, 3.5)) == doctest::Approx(3.5).epsilon(1e-15));

  for (int n = 0; n <= 4; ++n) {
    const GridFunction d = dirichlet_kernel(std::size_t{1} << n, SystemKind::Walsh, res);
    CHECK(integrate(d) == doctest::Approx(1.0).epsilon(1e-15));
  }

  const GridFunction w5 = system_function(SystemKind::Walsh, 5, res);
  CHECK(integrate(w5) == 0.0);
}

TEST_CASE("lp_norm examples") {
  const Resolution res(4);
  CHECK(lp_norm(GridFunction::constant(res, -2.0), 0.7) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(lp_norm(GridFunction::indicator(res, DyadicInterval(1, 0)), 2.0) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  const GridFunction d8 = dirichlet_kernel(8, SystemKind::Walsh, res);
  CHECK(lp_norm(d8, 0.5) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK_THROWS_AS(lp_norm(d8, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lp_norm(d8, -1.0), std::invalid_argument);
}

TEST_CASE("weak lp quasinorm examples") {
  const Resolution res(4);
  CHECK(weak_lp_quasinorm(GridFunction::constant(res, -3.0), 2.0) ==
        doctest::Approx(3.0).epsilon(1e-15));

  const GridFunction f = 4.0 * GridFunction::indicator(res, DyadicInterval(2, 0));
  CHECK(weak_lp_quasinorm(f, 0.5) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(weak_lp_quasinorm(f, 0.0), std::invalid_argument);
}

TEST_CASE("weak lp quasinorm via exhaustive lambda sweep") {
  // oracle: scan a dense lambda grid below each distinct value
  const Resolution res(6);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const GridFunction f = random_grid_function(res, seed);
    for (double p : {0.25, 0.5, 1.0, 2.0}) {
      double oracle = 0.0;
      for (std::size_t j = 0; j < f.size(); ++j) {
        const double lambda = std::abs(f[j]) * (1.0 - 1e-12);
        if (lambda <= 0.0) continue;
        std::size_t above = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (std::abs(f[i]) > lambda) ++above;
        }
        const double measure = std::ldexp(static_cast<double>(above), -res.bits());
        oracle = std::max(oracle, lambda * std::pow(measure, 1.0 / p));
      }
      CHECK(weak_lp_quasinorm(f, p) == doctest::Approx(oracle).epsilon(1e-9));
    }
  }
}

TEST_CASE("norm properties: homogeneity, chebyshev, interval additivity") {
  const Resolution res(6);
  for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
    const GridFunction f = random_grid_function(res, seed);
    for (double p : {0.25, 0.5, 1.0, 2.0}) {
      // weak-Lp never exceeds Lp
      CHECK(weak_lp_quasinorm(f, p) <= lp_norm(f, p) * (1 + 1e-12));
      // homogeneity
      const double c = -2.75;
      CHECK(lp_norm(c * f, p) == doctest::Approx(std::abs(c) * lp_norm(f, p)).epsilon(1e-12));
      CHECK(weak_lp_quasinorm(c * f, p) ==
            doctest::Approx(std::abs(c) * weak_lp_quasinorm(f, p)).epsilon(1e-12));
    }
    // sum of (interval average x measure) over any level telescopes to the integral
    for (int level = 0; level <= 6; ++level) {
      double total = 0.0;
      for (std::size_t prefix = 0; prefix < (std::size_t{1} << level); ++prefix) {
        const DyadicInterval interval(level, prefix);
        double sum = 0.0;
        const std::size_t first = interval.first_cell(res);
        for (std::size_t j = first; j < first + interval.cell_count(res); ++j) sum += f[j];
        const double average = sum / static_cast<double>(interval.cell_count(res));
        total += average * interval.measure();
      }
      CHECK(total == doctest::Approx(integrate(f)).epsilon(1e-12));
    }
  }
}

TEST_CASE("grid function validation") {
  const Resolution res(3);
  CHECK_THROWS_AS(GridFunction(res, std::vector<double>(7, 0.0)), std::invalid_argument);
  std::vector<double> bad(8, 0.0);
  bad[3] = std::nan("");
  CHECK_THROWS_AS(GridFunction(res, bad), std::invalid_argument);
}

TEST_CASE("dyadic convolution agrees with the spectral product route") {
  // convolving with a Dirichlet kernel is a partial sum
  const Resolution res(5);
  const GridFunction f = random_grid_function(res, 99);
  for (SystemKind system : {SystemKind::Walsh, SystemKind::Kaczmarz}) {
    for (std::size_t n : {1u, 5u, 16u, 32u}) {
      const GridFunction via_conv = dyadic_convolve(f, dirichlet_kernel(n, system, res));
      const GridFunction via_sum = partial_sum(f, n, system);
      CHECK(max_abs_diff(via_conv, via_sum) < 1e-12);
    }
  }
}

TEST_SUITE_END();
