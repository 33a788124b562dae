// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Bell expressions in Clauser-Horne form (local bound 0) evaluated on the
// singlet whose correlations are seen through decays with asymmetry product k:
//   Prob(a, b) = (1 - k a.b) / 4,   Prob(a) = Prob(b) = 1/2,
// and the Mermin-Peres contextuality value under the same shrinking.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperon/qcore.hpp"

namespace hyperon {

struct InequalitySpec {
  std::string name;
  Eigen::MatrixXd joint;     ///< coefficient of Prob(a_i, b_j)
  Eigen::VectorXd single_a;  ///< coefficient of Prob(a_i)
  Eigen::VectorXd single_b;  ///< coefficient of Prob(b_j)
  double local_bound = 0.0;

  /// CHSH with two settings per side.
  static InequalitySpec i2();
  static InequalitySpec i3();
  static InequalitySpec i4();
  /// "I2", "I3" or "I4"; DomainError otherwise.
  static InequalitySpec by_name(const std::string& name);

  int settings_a() const { return static_cast<int>(joint.rows()); }
  int settings_b() const { return static_cast<int>(joint.cols()); }
};

struct BellSettings {
  std::vector<Vec3> a;
  std::vector<Vec3> b;

  void validate(const InequalitySpec& spec) const;
};

/// Correlation scale k = alpha_1 alpha_2 in [0, 1].
struct ProbModel {
  double k = 1.0;
  void validate() const;
};

double prob_joint(const ProbModel& model, const Vec3& a, const Vec3& b);
double prob_single(const ProbModel& model, const Vec3& direction);

double evaluate(const InequalitySpec& spec, const BellSettings& settings, const ProbModel& model);

struct OptimizerOptions {
  int starts = 32;
  std::uint64_t seed = 1;
  /// Stop when the pattern step falls below this (radians).
  double step_tolerance = 1e-9;
  unsigned threads = 1;
};

struct BellMaximum {
  double value = 0.0;
  BellSettings settings;
};

/// Multistart Hooke-Jeeves search over the spherical angles of all settings.
/// Deterministic for a given seed, independent of the thread count.
BellMaximum maximize(const InequalitySpec& spec, const ProbModel& model,
                     const OptimizerOptions& options = {});

/// Smallest k with a positive maximum, by bisection to `tolerance`.
/// DomainError if the maximum does not change sign on [0, 1].
double threshold(const InequalitySpec& spec, const OptimizerOptions& options = {},
                 double tolerance = 1e-4);

/// (a1^2 + a2^2)^2 + 2 a1^3 a2^3; noncontextual bound 4.
double contextuality_value(double alpha_1, double alpha_2);
inline constexpr double kContextualityBound = 4.0;
/// Root of contextuality_value(a, a) = 4 on [0, 1] (about 0.916).
double contextuality_equal_alpha_root();
/// Threshold alpha > 0.88 as quoted alongside the formula in the hyperon
/// literature; it does not follow from contextuality_value.
inline constexpr double kQuotedContextualityThreshold = 0.88;

/// Mermin-Peres square on the singlet with every Pauli factor of particle 1
/// scaled by `scale_1` and of particle 2 by `scale_2`; returns
/// R1 + R2 + R3 + C1 + C2 - C3. Equals 6 for unit scales.
double mermin_peres_quantum_value(double scale_1, double scale_2);
inline double mermin_peres_quantum_value(double scaling) {
  return mermin_peres_quantum_value(scaling, scaling);
}

}  // namespace hyperon
