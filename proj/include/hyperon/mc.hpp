// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Event generation for single decays, singlet pairs and two-step cascades.
// All densities involved are linear in one cosine, (1 + a c)/2 on [-1, 1],
// and are drawn by inverting the quadratic CDF.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperon/cascade.hpp"
#include "hyperon/decay.hpp"
#include "hyperon/events.hpp"
#include "hyperon/random.hpp"

namespace hyperon {

/// Solves F(c) = u for F(c) = (c + 1)/2 + a (c^2 - 1)/4, |a| <= 1, in the
/// cancellation-free form c = -q / (1 + sqrt(1 - a q)), q = 2 - a - 4u.
double inverse_linear_cdf(double slope, double u);

Vec3 sample_isotropic(CounterStream& stream);

/// Direction with density (1 + slope n.axis) / (4 pi); axis must be unit.
Vec3 sample_about_axis(double slope, const Vec3& axis, CounterStream& stream);

/// Daughter direction from (1 + alpha s.n) / (4 pi).
Vec3 sample_single(const DecayParameters& params, const Vec3& s, CounterStream& stream);

/// Singlet pair: n1 isotropic, n2 from (1 - k n1.n2) about n1.
std::pair<Vec3, Vec3> sample_pair(double k, CounterStream& stream);

/// (n_mu, n_nu): n_mu from the first decay, n_nu from the exact conditional
/// density given n_mu, i.e. the second decay of the polarized intermediate.
std::pair<Vec3, Vec3> sample_cascade(const DecayParameters& mu, const DecayParameters& nu,
                                     const Vec3& s, CounterStream& stream);

struct SingleModel {
  std::string channel;
  DecayParameters params;
  Vec3 polarization = Vec3::Zero();
};

struct PairSampleModel {
  std::string channel;
  double k = 0.0;
};

struct CascadeModel {
  std::string channel;
  DecayParameters first;
  DecayParameters second;
  Vec3 polarization = Vec3::Zero();
};

using SampleModel = std::variant<SingleModel, PairSampleModel, CascadeModel>;

struct SampleConfig {
  std::uint64_t seed = 1;
  std::uint64_t events = 0;
  SampleModel model = SingleModel{};
  unsigned workers = 1;

  void validate() const;
};

using EventSink = std::function<void(std::span<const EventRecord>)>;

/// Emits the records of events 0..N-1 in id order, in blocks. Event i uses
/// only CounterStream(seed, i), so output does not depend on `workers`.
/// Exceptions thrown by the sink are rethrown as DataError naming the block.
void generate(const SampleConfig& config, const EventSink& sink,
              std::uint64_t block_events = 1u << 16);

std::vector<EventRecord> generate_all(const SampleConfig& config);

}  // namespace hyperon
