// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include "walshlab/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace walshlab {

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::NonIncreasing: return "non-increasing";
    case Monotonicity::NonDecreasing: return "non-decreasing";
    case Monotonicity::None: return "none";
  }
  return "none";
}

Monotonicity monotonicity_from_string(const std::string& name) {
  if (name == "non-increasing") return Monotonicity::NonIncreasing;
  if (name == "non-decreasing") return Monotonicity::NonDecreasing;
  if (name == "none") return Monotonicity::None;
  throw std::invalid_argument("unknown monotonicity '" + name +
                              "' (want non-increasing|non-decreasing|none)");
}

WeightSequence::WeightSequence(std::function<double(std::size_t)> q, Monotonicity monotonicity,
                               std::string label)
    : generator_(std::move(q)),
      monotonicity_(monotonicity),
      label_(std::move(label)),
      cache_(std::make_shared<Cache>()) {
  cache_->prefix.push_back(0.0);  // Q_0
}

WeightSequence WeightSequence::from_values(std::vector<double> q, Monotonicity monotonicity,
                                           std::string label) {
  auto values = std::make_shared<std::vector<double>>(std::move(q));
  auto generator = [values, label](std::size_t k) -> double {
    if (k >= values->size()) {
      throw std::out_of_range("weights '" + label + "': index " + std::to_string(k) +
                              " beyond the " + std::to_string(values->size()) +
                              " supplied values");
    }
    return (*values)[k];
  };
  return WeightSequence(std::move(generator), monotonicity, std::move(label));
}

void WeightSequence::extend(std::size_t upto_exclusive) const {
  Cache& c = *cache_;
  while (c.q.size() < upto_exclusive) {
    const std::size_t k = c.q.size();
    const double value = generator_(k);
    if (!(value >= 0.0)) {
      throw std::invalid_argument("weights '" + label_ + "': q_" + std::to_string(k) +
                                  " = " + std::to_string(value) + " is negative");
    }
    // Declared monotonicity is checked from k = 1 (q_0 is the conventional
    // repair slot and never weights a nonzero partial sum).
    if (k >= 2) {
      const double prev = c.q[k - 1];
      const bool bad = (monotonicity_ == Monotonicity::NonIncreasing && value > prev) ||
                       (monotonicity_ == Monotonicity::NonDecreasing && value < prev);
      if (bad) {
        throw std::invalid_argument("weights '" + label_ + "' declared " +
                                    to_string(monotonicity_) + " but q_" +
                                    std::to_string(k - 1) + " -> q_" + std::to_string(k) +
                                    " violates it");
      }
    }
    c.q.push_back(value);
    c.prefix.push_back(c.prefix.back() + value);
  }
}

double WeightSequence::q(std::size_t k) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  extend(k + 1);
  return cache_->q[k];
}

double WeightSequence::Q(std::size_t n) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  extend(n);
  return cache_->prefix[n];
}

std::string to_string(MeanOrientation o) {
  return o == MeanOrientation::TMean ? "t" : "norlund";
}

double cesaro_number(double alpha, std::size_t n) {
  double a = 1.0;
  for (std::size_t k = 1; k <= n; ++k) a *= (static_cast<double>(k) + alpha) / static_cast<double>(k);
  return a;
}

namespace {

void require_alpha_unit(double alpha, const char* family) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument(std::string(family) + ": alpha must lie in (0, 1)");
  }
}

// q_k = A_k^(alpha-1) via the running-product recurrence.
std::function<double(std::size_t)> cesaro_weight_generator(double alpha) {
  auto cache = std::make_shared<std::vector<double>>(1, 1.0);
  return [cache, alpha](std::size_t k) {
    while (cache->size() <= k) {
      const double j = static_cast<double>(cache->size());
      cache->push_back(cache->back() * (j + alpha - 1.0) / j);
    }
    return (*cache)[k];
  };
}

// log applied beta times to k^alpha; 0 where undefined or negative.
double iterated_log_weight(std::size_t k, double alpha, int beta) {
  if (k == 0) return 0.0;
  double v = alpha * std::log(static_cast<double>(k));  // log(k^alpha)
  for (int i = 1; i < beta; ++i) {
    if (v <= 0.0) return 0.0;
    v = std::log(v);
  }
  return v > 0.0 ? v : 0.0;
}

}  // namespace

MeanFamily::MeanFamily(std::string name, WeightSequence weights, MeanOrientation orientation)
    : name_(std::move(name)), weights_(std::move(weights)), orientation_(orientation) {}

MeanFamily MeanFamily::fejer() {
  return MeanFamily("fejer",
                    WeightSequence([](std::size_t) { return 1.0; },
                                   Monotonicity::NonIncreasing, "fejer"),
                    MeanOrientation::TMean);
}

MeanFamily MeanFamily::riesz() {
  return MeanFamily("riesz",
                    WeightSequence([](std::size_t k) { return k == 0 ? 0.0 : 1.0 / static_cast<double>(k); },
                                   Monotonicity::NonIncreasing, "riesz"),
                    MeanOrientation::TMean);
}

MeanFamily MeanFamily::cesaro(double alpha) {
  require_alpha_unit(alpha, "cesaro");
  return MeanFamily("cesaro:" + std::to_string(alpha),
                    WeightSequence(cesaro_weight_generator(alpha), Monotonicity::NonIncreasing,
                                   "cesaro:" + std::to_string(alpha)),
                    MeanOrientation::Norlund);
}

MeanFamily MeanFamily::inverse_cesaro(double alpha) {
  require_alpha_unit(alpha, "inverse_cesaro");
  return MeanFamily("u:" + std::to_string(alpha),
                    WeightSequence(cesaro_weight_generator(alpha), Monotonicity::NonIncreasing,
                                   "u:" + std::to_string(alpha)),
                    MeanOrientation::TMean);
}

MeanFamily MeanFamily::power_v(double alpha) {
  // alpha = 1 degenerates to the Fejer weights and stays constructible.
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("power_v: alpha must lie in (0, 1]");
  }
  return MeanFamily(
      "v:" + std::to_string(alpha),
      WeightSequence(
          [alpha](std::size_t k) {
            return k == 0 ? 1.0 : std::pow(static_cast<double>(k), alpha - 1.0);
          },
          Monotonicity::NonIncreasing, "v:" + std::to_string(alpha)),
      MeanOrientation::TMean);
}

MeanFamily MeanFamily::log_b(double alpha, int beta) {
  if (!(alpha > 0.0)) throw std::invalid_argument("log_b: alpha must be positive");
  if (beta != 1 && beta != 2) throw std::invalid_argument("log_b: beta must be 1 or 2");
  const std::string name = "b:" + std::to_string(alpha) + ":" + std::to_string(beta);
  return MeanFamily(name,
                    WeightSequence([alpha, beta](std::size_t k) { return iterated_log_weight(k, alpha, beta); },
                                   Monotonicity::NonDecreasing, name),
                    MeanOrientation::TMean);
}

MeanFamily MeanFamily::norlund_log() {
  return MeanFamily("nlog",
                    WeightSequence([](std::size_t k) { return k == 0 ? 0.0 : 1.0 / static_cast<double>(k); },
                                   Monotonicity::NonIncreasing, "nlog"),
                    MeanOrientation::Norlund);
}

MeanFamily MeanFamily::custom(WeightSequence weights, MeanOrientation orientation) {
  std::string name = "custom:" + weights.label();
  return MeanFamily(std::move(name), std::move(weights), orientation);
}

MeanFamily MeanFamily::with_orientation(MeanOrientation o) const {
  MeanFamily out = *this;
  out.orientation_ = o;
  return out;
}

const WeightSequence& make_weights(const MeanFamily& family) { return family.weights(); }

}  // namespace walshlab
