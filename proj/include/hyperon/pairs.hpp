// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Hyperon-antihyperon pairs produced in a two-qubit spin state and analyzed
// through both decays. Each decay acts on its particle as the effect
// operator 1 + alpha n.sigma, so the singlet gives
//   p(n1, n2) = (1 - k n1.n2) / (4 pi)^2,  k = alpha_1 alpha_2,
// and every spin correlation is seen shrunk by k.
#pragma once

#include <span>
#include <vector>

#include "hyperon/events.hpp"
#include "hyperon/qcore.hpp"

namespace hyperon {

class PairModel {
 public:
  /// Singlet production.
  PairModel(double alpha_1, double alpha_2);
  PairModel(double alpha_1, double alpha_2, DensityMatrix state);
  /// Singlet with alpha_1 = alpha_2 (up to the sign of k) and product k.
  static PairModel from_product(double k);

  double alpha_1() const noexcept { return alpha_1_; }
  double alpha_2() const noexcept { return alpha_2_; }
  double k() const noexcept { return alpha_1_ * alpha_2_; }
  const DensityMatrix& state() const noexcept { return state_; }
  bool is_singlet() const;

 private:
  double alpha_1_;
  double alpha_2_;
  DensityMatrix state_;
};

/// Per-particle effect operator 1 + alpha n.sigma.
ComplexMatrix decay_effect(double alpha, const Vec3& n);

/// Normalized joint direction density. Closed form for the singlet, the
/// tensor-product trace Tr[(E1 (x) E2) rho] / (4 pi)^2 otherwise.
double joint_pdf(const PairModel& model, const Vec3& n1, const Vec3& n2);

/// Tr(W_k rho) with W_k = (1/3)(1 (x) 1 + k sum_i sigma_i (x) sigma_i);
/// 1/3 - k for the singlet. Negative means entanglement is detected.
double witness_value(const PairModel& model);

struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Streaming first and second moments of pair events. Batches may be
/// accumulated independently and merged.
class PairMoments {
 public:
  void add(const Vec3& n1, const Vec3& n2);
  void merge(const PairMoments& other);

  std::size_t count() const noexcept { return count_; }
  /// mean and standard error of n1.n2
  Estimate dot() const;
  /// mean and standard error of n1_i n2_j
  Eigen::Matrix3d outer_mean() const;
  Eigen::Matrix3d outer_standard_error() const;

 private:
  std::size_t count_ = 0;
  double dot_sum_ = 0.0;
  double dot_sq_sum_ = 0.0;
  Eigen::Matrix3d outer_sum_ = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d outer_sq_sum_ = Eigen::Matrix3d::Zero();
};

inline constexpr std::size_t kMinimumPairEvents = 100;

PairMoments accumulate(std::span<const PairEvent> events);

/// 1/3 + 3 mean(n1.n2) with standard error 3 sd / sqrt(N).
Estimate witness_estimate(const PairMoments& moments);
Estimate witness_estimate(std::span<const PairEvent> events);

struct CorrelationEstimate {
  Eigen::Matrix3d value;
  Eigen::Matrix3d standard_error;
  /// False for the renormalized matrix: dividing by alpha_1 alpha_2 uses
  /// quantum-mechanical input and is not admissible in a Bell test.
  bool bell_admissible = true;
};

/// 9 mean(n1_i n2_j), optionally divided by alpha_1 alpha_2 (-> -1 for the singlet).
CorrelationEstimate correlation_estimate(const PairMoments& moments, const PairModel& model,
                                         bool renormalize);
CorrelationEstimate correlation_estimate(std::span<const PairEvent> events,
                                         const PairModel& model, bool renormalize);

/// Groups pair-1/pair-2 records sharing an event id. DataError on any other
/// role or on an unmatched record.
std::vector<PairEvent> collect_pairs(std::span<const EventRecord> records);

/// Diagonal of the correlation tensor of a locally maximally mixed state
/// rho = (1/4)(1 + sum_i c_i sigma_i (x) sigma_i).
struct SimplexPoint {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  static SimplexPoint singlet() { return {-1.0, -1.0, -1.0}; }
};

SimplexPoint simplex_shrink(const SimplexPoint& p, double k);
ComplexMatrix simplex_matrix(const SimplexPoint& p);
/// Positivity of simplex_matrix(p): the tetrahedron spanned by the Bell states.
bool in_state_tetrahedron(const SimplexPoint& p);
/// |c1| + |c2| + |c3| <= 1, the separable double pyramid. DomainError when p
/// is not a state.
bool is_separable_point(const SimplexPoint& p);
/// Peres-Horodecki test on a two-qubit state.
bool is_ppt(const DensityMatrix& rho);

}  // namespace hyperon
