// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#ifndef WALSHLAB_WEIGHTS_HPP
#define WALSHLAB_WEIGHTS_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace walshlab {

enum class Monotonicity { NonIncreasing, NonDecreasing, None };

std::string to_string(Monotonicity m);
Monotonicity monotonicity_from_string(const std::string& name);

/// Nonnegative weight sequence q_k with cached prefix sums
/// Q_n = q_0 + ... + q_{n-1}.
///
/// A declared monotonicity is verified lazily over every index range the
/// sequence is actually evaluated on. The check starts at k = 1: q_0 is the
/// conventional repair slot (several families set q_0 = 0 where the defining
/// formula is singular at k = 0), and q_0 never weights anything in a T mean
/// because S_0 f = 0.
class WeightSequence {
 public:
  WeightSequence(std::function<double(std::size_t)> q, Monotonicity monotonicity,
                 std::string label);

  /// Finite sequence, e.g. from a weights CSV. Evaluating past the end throws.
  static WeightSequence from_values(std::vector<double> q, Monotonicity monotonicity,
                                    std::string label);

  double q(std::size_t k) const;
  /// Q_n; Q_0 = 0.
  double Q(std::size_t n) const;

  Monotonicity monotonicity() const { return monotonicity_; }
  const std::string& label() const { return label_; }

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<double> q;        // q[k]
    std::vector<double> prefix;   // prefix[n] = Q_n, size q.size()+1
  };

  void extend(std::size_t upto_exclusive) const;

  std::function<double(std::size_t)> generator_;
  Monotonicity monotonicity_;
  std::string label_;
  std::shared_ptr<Cache> cache_;
};

enum class MeanOrientation { TMean, Norlund };

std::string to_string(MeanOrientation o);

/// A named summability method: a weight family plus its T-vs-Norlund
/// orientation. Orientations default to the defining formulas:
///
///   Fejer        q_k = 1                               T
///   Riesz        q_0 = 0, q_k = 1/k                    T       (Q_n = l_n)
///   Cesaro       q_k = A_k^(alpha-1)                   Norlund
///   InverseCesaro q_k = A_k^(alpha-1)                  T
///   PowerV       q_0 = 1, q_k = k^(alpha-1)            T
///   LogB         q_k = max(0, log^(beta)(k^alpha))     T
///   NorlundLog   q_0 = 0, q_k = 1/k                    Norlund (L_n)
///   Custom       caller-provided weights               caller-declared
class MeanFamily {
 public:
  static MeanFamily fejer();
  static MeanFamily riesz();
  static MeanFamily cesaro(double alpha);          // 0 < alpha < 1
  static MeanFamily inverse_cesaro(double alpha);  // 0 < alpha < 1
  static MeanFamily power_v(double alpha);         // 0 < alpha <= 1
  static MeanFamily log_b(double alpha, int beta); // alpha > 0, beta in {1, 2}
  static MeanFamily norlund_log();
  static MeanFamily custom(WeightSequence weights, MeanOrientation orientation);

  const std::string& name() const { return name_; }
  MeanOrientation orientation() const { return orientation_; }
  const WeightSequence& weights() const { return weights_; }

  MeanFamily with_orientation(MeanOrientation o) const;

 private:
  MeanFamily(std::string name, WeightSequence weights, MeanOrientation orientation);

  std::string name_;
  WeightSequence weights_;
  MeanOrientation orientation_;
};

/// The weight sequence behind a family.
const WeightSequence& make_weights(const MeanFamily& family);

/// Cesaro number A_n^alpha = (alpha+1)...(alpha+n)/n!, A_0^alpha = 1,
/// by the stable recurrence A_n = A_{n-1} (n+alpha)/n.
double cesaro_number(double alpha, std::size_t n);

}  // namespace walshlab

#endif
