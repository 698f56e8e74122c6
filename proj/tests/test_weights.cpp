// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "walshlab/summability.hpp"
#include "walshlab/weights.hpp"

using namespace walshlab;

namespace {

// A_n^alpha straight from the factorial form (alpha+1)...(alpha+n)/n!,
// evaluated term by term; independent of the recurrence in the library.
double cesaro_factorial_form(double alpha, std::size_t n) {
  double value = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    value *= (alpha + static_cast<double>(j)) / static_cast<double>(j);
  }
  return value;
}

}  // namespace

TEST_SUITE_BEGIN("weights");

TEST_CASE("fejer weights: Q_n = n") {
  const auto& w = MeanFamily::fejer().weights();
  for (std::size_t n = 0; n <= 64; ++n) CHECK(w.Q(n) == static_cast<double>(n));
}

TEST_CASE("riesz weights: Q_n is the harmonic prefix l_n") {
  const auto& w = MeanFamily::riesz().weights();
  CHECK(w.q(0) == 0.0);
  double l = 0.0;
  for (std::size_t n = 2; n <= 64; ++n) {
    l += 1.0 / static_cast<double>(n - 1);
    CHECK(w.Q(n) == doctest::Approx(l).epsilon(1e-15));
  }
}

TEST_CASE("cesaro numbers: prefix sums telescope into the next order") {
  // sum_{j=0}^{n} A_j^(alpha-1) = A_n^alpha, against the factorial form
  for (double alpha : {0.3, 0.5, 0.9}) {
    const auto& w = MeanFamily::cesaro(alpha).weights();
    for (std::size_t n = 0; n <= 64; ++n) {
      CHECK(w.Q(n + 1) ==
            doctest::Approx(cesaro_factorial_form(alpha, n)).epsilon(1e-12));
      CHECK(cesaro_number(alpha - 1.0, n) ==
            doctest::Approx(cesaro_factorial_form(alpha - 1.0, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("power_v(1) reduces to the fejer weights") {
  const auto& v = MeanFamily::power_v(1.0).weights();
  for (std::size_t k = 0; k <= 32; ++k) CHECK(v.q(k) == 1.0);
}

TEST_CASE("log_b clamping") {
  const auto& b11 = MeanFamily::log_b(1.0, 1).weights();
  CHECK(b11.q(0) == 0.0);
  CHECK(b11.q(1) == 0.0);             // log 1
  CHECK(b11.q(2) == doctest::Approx(std::log(2.0)));
  const auto& b12 = MeanFamily::log_b(1.0, 2).weights();
  CHECK(b12.q(2) == 0.0);             // log log 2 < 0, clamped
  CHECK(b12.q(3) == doctest::Approx(std::log(std::log(3.0))));
  CHECK_THROWS_AS(MeanFamily::log_b(0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(MeanFamily::log_b(1.0, 3), std::invalid_argument);
}

TEST_CASE("parameter ranges") {
  CHECK_THROWS_AS(MeanFamily::cesaro(0.0), std::invalid_argument);
  CHECK_THROWS_AS(MeanFamily::cesaro(1.0), std::invalid_argument);
  CHECK_THROWS_AS(MeanFamily::power_v(1.5), std::invalid_argument);
}

TEST_CASE("declared monotonicity is enforced while extending") {
  WeightSequence bad([](std::size_t k) { return static_cast<double>(k % 3); },
                     Monotonicity::NonIncreasing, "sawtooth");
  CHECK_THROWS_AS(bad.Q(10), std::invalid_argument);

  // q_0 is exempt: the riesz repair q_0 = 0 < q_1 = 1 must stay legal
  const auto& riesz = MeanFamily::riesz().weights();
  CHECK_NOTHROW(riesz.Q(100));

  WeightSequence negative([](std::size_t k) { return k == 5 ? -1.0 : 1.0; },
                          Monotonicity::None, "negative");
  CHECK_THROWS_AS(negative.Q(10), std::invalid_argument);
}

TEST_CASE("finite custom weights refuse evaluation past the end") {
  const auto w = WeightSequence::from_values({1.0, 2.0, 3.0}, Monotonicity::NonDecreasing, "short");
  CHECK(w.Q(3) == 6.0);
  CHECK_THROWS_AS(w.Q(4), std::out_of_range);
}

TEST_CASE("weight diagnostics examples") {
  SUBCASE("fejer: ratio_node is exactly 1") {
    const auto d = weight_diagnostics(MeanFamily::fejer().weights(), 64);
    for (const auto& row : d.rows) CHECK(row.ratio_node == 1.0);
    CHECK(d.node_sup == 1.0);
  }
  SUBCASE("log_b(1,1): ratio_node bounded by 2 from n = 4 on") {
    const auto d = weight_diagnostics(MeanFamily::log_b(1.0, 1).weights(), 10000);
    for (const auto& row : d.rows) {
      if (row.n >= 4) REQUIRE(row.ratio_node <= 2.0);
    }
  }
  SUBCASE("k+1 weights: ratio_cond1 has the closed form 2n/(n+3)") {
    const WeightSequence w([](std::size_t k) { return static_cast<double>(k + 1); },
                           Monotonicity::NonDecreasing, "k_plus_1");
    const auto d = weight_diagnostics(w, 128);
    for (const auto& row : d.rows) {
      const double n = static_cast<double>(row.n);
      REQUIRE(row.ratio_cond1 == doctest::Approx(2.0 * n / (n + 3.0)).epsilon(1e-14));
      if (row.n >= 3) REQUIRE(row.ratio_cond1 >= 1.0);
    }
  }
  SUBCASE("n_max below 3 is rejected") {
    CHECK_THROWS_AS(weight_diagnostics(MeanFamily::fejer().weights(), 2),
                    std::invalid_argument);
  }
}

TEST_CASE("regularity: Q_n grows strictly once the weights kick in") {
  struct Entry {
    MeanFamily family;
    std::size_t from;
  };
  const Entry entries[] = {
      {MeanFamily::fejer(), 1},         {MeanFamily::riesz(), 1},
      {MeanFamily::cesaro(0.5), 1},     {MeanFamily::inverse_cesaro(0.5), 1},
      {MeanFamily::power_v(0.7), 1},    {MeanFamily::log_b(1.0, 1), 2},
      {MeanFamily::norlund_log(), 1},
  };
  for (const auto& entry : entries) {
    const auto& w = entry.family.weights();
    for (std::size_t n = entry.from; n < 512; ++n) {
      REQUIRE(w.Q(n + 1) > w.Q(n));
    }
  }
}

TEST_SUITE_END();
