// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include "hyperon/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace hyperon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSlopeTol = 1e-9;

void require_polarization(const Vec3& s) {
  if (s.norm() > 1.0 + tolerance::kUnitNorm) throw DomainError("polarization longer than 1");
}

std::size_t records_per_event(const SampleModel& model) {
  return std::holds_alternative<SingleModel>(model) ? 1 : 2;
}

void fill_event(const SampleModel& model, std::uint64_t seed, std::uint64_t id,
                EventRecord* out) {
  CounterStream stream(seed, id);
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, SingleModel>) {
          out[0] = {id, Role::Single, m.channel, sample_single(m.params, m.polarization, stream)};
        } else if constexpr (std::is_same_v<M, PairSampleModel>) {
          auto [n1, n2] = sample_pair(m.k, stream);
          out[0] = {id, Role::Pair1, m.channel, n1};
          out[1] = {id, Role::Pair2, m.channel, n2};
        } else {
          auto [n_mu, n_nu] = sample_cascade(m.first, m.second, m.polarization, stream);
          out[0] = {id, Role::CascadeMu, m.channel, n_mu};
          out[1] = {id, Role::CascadeNu, m.channel, n_nu};
        }
      },
      model);
}

}  // namespace

double inverse_linear_cdf(double slope, double u) {
  const double q = 2.0 - slope - 4.0 * u;
  const double disc = std::max(0.0, 1.0 - slope * q);
  return std::clamp(-q / (1.0 + std::sqrt(disc)), -1.0, 1.0);
}

Vec3 sample_isotropic(CounterStream& stream) {
  const double c = 2.0 * stream.uniform() - 1.0;
  const double phi = kTwoPi * stream.uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  return {s * std::cos(phi), s * std::sin(phi), c};
}

Vec3 sample_about_axis(double slope, const Vec3& axis, CounterStream& stream) {
  const double c = inverse_linear_cdf(slope, stream.uniform());
  const double psi = kTwoPi * stream.uniform();
  // Orthonormal frame (e1, e2, axis).
  const Vec3 helper = std::abs(axis.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = axis.cross(helper).normalized();
  const Vec3 e2 = axis.cross(e1);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  return (c * axis + s * (std::cos(psi) * e1 + std::sin(psi) * e2)).normalized();
}

Vec3 sample_single(const DecayParameters& params, const Vec3& s, CounterStream& stream) {
  require_polarization(s);
  const double length = s.norm();
  if (length == 0.0) return sample_about_axis(0.0, Vec3::UnitZ(), stream);
  return sample_about_axis(params.alpha * length, s / length, stream);
}

std::pair<Vec3, Vec3> sample_pair(double k, CounterStream& stream) {
  if (!(std::abs(k) <= 1.0)) throw DomainError("|k| must not exceed 1");
  const Vec3 n1 = sample_isotropic(stream);
  return {n1, sample_about_axis(-k, n1, stream)};
}

std::pair<Vec3, Vec3> sample_cascade(const DecayParameters& mu, const DecayParameters& nu,
                                     const Vec3& s, CounterStream& stream) {
  require_polarization(s);
  const Vec3 n_mu = sample_single(mu, s, stream);
  const Vec3 pol = daughter_polarization(mu, s, n_mu);
  double length = pol.norm();
  if (length > 1.0 + kSlopeTol)
    throw DomainError("intermediate polarization longer than 1; decay parameters unphysical");
  length = std::min(length, 1.0);
  if (length == 0.0) return {n_mu, sample_about_axis(0.0, Vec3::UnitZ(), stream)};
  return {n_mu, sample_about_axis(nu.alpha * length, pol / pol.norm(), stream)};
}

void SampleConfig::validate() const {
  if (events < 1) throw DomainError("event count must be at least 1");
  std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, SingleModel>) {
          require_polarization(m.polarization);
        } else if constexpr (std::is_same_v<M, PairSampleModel>) {
          if (!(std::abs(m.k) <= 1.0)) throw DomainError("|k| must not exceed 1");
        } else {
          require_polarization(m.polarization);
        }
      },
      model);
}

void generate(const SampleConfig& config, const EventSink& sink, std::uint64_t block_events) {
  config.validate();
  if (block_events == 0) block_events = 1;
  const std::size_t per_event = records_per_event(config.model);
  const unsigned workers = std::max(1u, config.workers);
  std::vector<EventRecord> buffer;

  for (std::uint64_t begin = 0; begin < config.events; begin += block_events) {
    const std::uint64_t end = std::min(config.events, begin + block_events);
    const std::uint64_t count = end - begin;
    buffer.assign(count * per_event, EventRecord{});

    auto run = [&](std::uint64_t from, std::uint64_t to) {
      for (std::uint64_t id = from; id < to; ++id)
        fill_event(config.model, config.seed, id, &buffer[(id - begin) * per_event]);
    };
    const unsigned used = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
    if (used <= 1) {
      run(begin, end);
    } else {
      std::vector<std::thread> pool;
      const std::uint64_t chunk = (count + used - 1) / used;
      for (unsigned w = 0; w < used; ++w) {
        const std::uint64_t from = begin + w * chunk;
        const std::uint64_t to = std::min(end, from + chunk);
        if (from < to) pool.emplace_back(run, from, to);
      }
      for (auto& t : pool) t.join();
    }

    try {
      sink(std::span<const EventRecord>(buffer));
    } catch (const std::exception& e) {
      throw DataError("emitting events " + std::to_string(begin) + ".." +
                      std::to_string(end - 1) + " failed: " + e.what());
    }
  }
}

std::vector<EventRecord> generate_all(const SampleConfig& config) {
  std::vector<EventRecord> out;
  generate(config, [&out](std::span<const EventRecord> block) {
    out.insert(out.end(), block.begin(), block.end());
  });
  return out;
}

}  // namespace hyperon
