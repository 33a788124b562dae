// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include "hyperon/pairs.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hyperon {

namespace {

constexpr double kSeparableTol = 1e-12;

void require_alpha(double alpha) {
  if (!(std::abs(alpha) <= 1.0)) throw DomainError("asymmetry parameter outside [-1, 1]");
}

ComplexMatrix correlation_operator() {
  ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 3; ++i) sum += tensor(pauli<double>(i), pauli<double>(i));
  return sum;
}

}  // namespace

PairModel::PairModel(double alpha_1, double alpha_2)
    : PairModel(alpha_1, alpha_2, singlet_state()) {}

PairModel::PairModel(double alpha_1, double alpha_2, DensityMatrix state)
    : alpha_1_(alpha_1), alpha_2_(alpha_2), state_(std::move(state)) {
  require_alpha(alpha_1);
  require_alpha(alpha_2);
  if (state_.dim() != 4) throw DimensionError("pair state must be a two-qubit density matrix");
}

PairModel PairModel::from_product(double k) {
  if (!(std::abs(k) <= 1.0)) throw DomainError("|k| must not exceed 1");
  const double root = std::sqrt(std::abs(k));
  return PairModel(root, k < 0.0 ? -root : root);
}

bool PairModel::is_singlet() const {
  return (state_.matrix() - singlet_state().matrix()).cwiseAbs().maxCoeff() <=
         tolerance::kHermitian;
}

ComplexMatrix decay_effect(double alpha, const Vec3& n) {
  return identity<double>(2) + alpha * dot_sigma<double>(n);
}

double joint_pdf(const PairModel& model, const Vec3& n1, const Vec3& n2) {
  require_unit(n1, "pair direction n1");
  require_unit(n2, "pair direction n2");
  constexpr double four_pi = 4.0 * std::numbers::pi;
  if (model.is_singlet()) return (1.0 - model.k() * n1.dot(n2)) / (four_pi * four_pi);
  const ComplexMatrix effect =
      tensor(decay_effect(model.alpha_1(), n1), decay_effect(model.alpha_2(), n2));
  return (effect * model.state().matrix()).trace().real() / (four_pi * four_pi);
}

double witness_value(const PairModel& model) {
  const double correlation = (correlation_operator() * model.state().matrix()).trace().real();
  return (1.0 + model.k() * correlation) / 3.0;
}

void PairMoments::add(const Vec3& n1, const Vec3& n2) {
  const double d = n1.dot(n2);
  const Eigen::Matrix3d outer = n1 * n2.transpose();
  ++count_;
  dot_sum_ += d;
  dot_sq_sum_ += d * d;
  outer_sum_ += outer;
  outer_sq_sum_ += outer.cwiseProduct(outer);
}

void PairMoments::merge(const PairMoments& other) {
  count_ += other.count_;
  dot_sum_ += other.dot_sum_;
  dot_sq_sum_ += other.dot_sq_sum_;
  outer_sum_ += other.outer_sum_;
  outer_sq_sum_ += other.outer_sq_sum_;
}

Estimate PairMoments::dot() const {
  if (count_ < 2) throw DataError("need at least two pair events");
  const double n = static_cast<double>(count_);
  const double mean = dot_sum_ / n;
  const double var = std::max(0.0, (dot_sq_sum_ - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

Eigen::Matrix3d PairMoments::outer_mean() const {
  if (count_ == 0) throw DataError("no pair events");
  return outer_sum_ / static_cast<double>(count_);
}

Eigen::Matrix3d PairMoments::outer_standard_error() const {
  if (count_ < 2) throw DataError("need at least two pair events");
  const double n = static_cast<double>(count_);
  const Eigen::Matrix3d mean = outer_mean();
  const Eigen::Matrix3d var =
      ((outer_sq_sum_ - n * mean.cwiseProduct(mean)) / (n - 1.0)).cwiseMax(0.0);
  return (var / n).cwiseSqrt();
}

PairMoments accumulate(std::span<const PairEvent> events) {
  PairMoments moments;
  for (const auto& e : events) moments.add(e.n1, e.n2);
  return moments;
}

Estimate witness_estimate(const PairMoments& moments) {
  if (moments.count() < kMinimumPairEvents)
    throw DataError("witness estimate needs at least " + std::to_string(kMinimumPairEvents) +
                    " pair events, got " + std::to_string(moments.count()));
  const Estimate d = moments.dot();
  return {1.0 / 3.0 + 3.0 * d.value, 3.0 * d.standard_error};
}

Estimate witness_estimate(std::span<const PairEvent> events) {
  return witness_estimate(accumulate(events));
}

CorrelationEstimate correlation_estimate(const PairMoments& moments, const PairModel& model,
                                         bool renormalize) {
  if (moments.count() < kMinimumPairEvents)
    throw DataError("correlation estimate needs at least " +
                    std::to_string(kMinimumPairEvents) + " pair events, got " +
                    std::to_string(moments.count()));
  CorrelationEstimate out{9.0 * moments.outer_mean(), 9.0 * moments.outer_standard_error(),
                          true};
  if (renormalize) {
    const double k = model.k();
    if (k == 0.0) throw DomainError("cannot renormalize by a vanishing asymmetry product");
    out.value /= k;
    out.standard_error /= std::abs(k);
    out.bell_admissible = false;
  }
  return out;
}

CorrelationEstimate correlation_estimate(std::span<const PairEvent> events,
                                         const PairModel& model, bool renormalize) {
  return correlation_estimate(accumulate(events), model, renormalize);
}

std::vector<PairEvent> collect_pairs(std::span<const EventRecord> records) {
  std::vector<PairEvent> pairs;
  pairs.reserve(records.size() / 2);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const EventRecord& first = records[i];
    if (first.role != Role::Pair1)
      throw DataError("event " + std::to_string(first.event_id) + " has role '" +
                      std::string(to_string(first.role)) + "', expected pair-1");
    if (i + 1 >= records.size() || records[i + 1].role != Role::Pair2 ||
        records[i + 1].event_id != first.event_id)
      throw DataError("event " + std::to_string(first.event_id) +
                      " has no matching pair-2 record");
    pairs.push_back({first.event_id, first.n, records[i + 1].n});
    ++i;
  }
  return pairs;
}

SimplexPoint simplex_shrink(const SimplexPoint& p, double k) {
  return {k * p.c1, k * p.c2, k * p.c3};
}

ComplexMatrix simplex_matrix(const SimplexPoint& p) {
  const double c[3] = {p.c1, p.c2, p.c3};
  ComplexMatrix m = identity<double>(4);
  for (int i = 0; i < 3; ++i) m += c[i] * tensor(pauli<double>(i), pauli<double>(i));
  return m / 4.0;
}

bool in_state_tetrahedron(const SimplexPoint& p) {
  return hermitian_eigenvalues<double>(simplex_matrix(p)).minCoeff() >=
         tolerance::kNegativeEigenvalue;
}

bool is_separable_point(const SimplexPoint& p) {
  if (!in_state_tetrahedron(p)) throw DomainError("simplex point is not a quantum state");
  return std::abs(p.c1) + std::abs(p.c2) + std::abs(p.c3) <= 1.0 + kSeparableTol;
}

bool is_ppt(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("PPT test is implemented for two qubits");
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix pt(4, 4);
  // Transpose the second qubit: (i1 i2, j1 j2) -> (i1 j2, j1 i2).
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) pt(2 * i1 + j2, 2 * j1 + i2) = m(2 * i1 + i2, 2 * j1 + j2);
  return hermitian_eigenvalues<double>(pt).minCoeff() >= tolerance::kNegativeEigenvalue;
}

}  // namespace hyperon
