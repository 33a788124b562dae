// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include "hyperon/interferometer.hpp"

#include <cmath>
#include <numbers>

namespace hyperon {

namespace {

constexpr double kPi = std::numbers::pi;

double sign_of(Outcome outcome) { return outcome == Outcome::Plus ? 1.0 : -1.0; }

int axis_index(Axis axis) {
  switch (axis) {
    case Axis::X:
      return 0;
    case Axis::Y:
      return 1;
    case Axis::Z:
      return 2;
  }
  return 2;
}

}  // namespace

SpinState::SpinState(double theta, double phi, double purity)
    : theta_(theta), phi_(phi), purity_(purity) {
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("SpinState: theta outside [0, pi]");
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) throw DomainError("SpinState: phi outside [0, 2 pi)");
  if (!(purity >= 0.0 && purity <= 1.0)) throw DomainError("SpinState: |s| outside [0, 1]");
}

void InterferometerConfig::validate() const {
  if (!(weight_a >= 0.0 && weight_b >= 0.0))
    throw DomainError("interferometer splitting weights must be nonnegative");
  if (weight_a + weight_b <= 0.0) throw DomainError("interferometer splitting is 0:0");
}

Complementarity InterferometerConfig::complementarity() const {
  validate();
  return complementarity_from_norms(std::sqrt(weight_a), std::sqrt(weight_b));
}

ComplexMatrix beam_splitter() {
  const std::complex<double> i(0.0, 1.0);
  return std::cos(kPi / 4.0) * identity<double>(2) - i * std::sin(kPi / 4.0) * pauli<double>(1);
}

ComplexMatrix phase_shifter(double chi) {
  const std::complex<double> i(0.0, 1.0);
  return std::cos(chi / 2.0) * identity<double>(2) - i * std::sin(chi / 2.0) * pauli<double>(0);
}

ComplexMatrix interferometer_unitary(double chi) {
  const ComplexMatrix bs = beam_splitter();
  return bs * phase_shifter(chi) * bs;
}

DensityMatrix evolve(const InterferometerConfig& cfg, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("interferometer acts on spin-1/2 states only");
  const ComplexMatrix u = interferometer_unitary(cfg.chi);
  ComplexMatrix out = u * rho.matrix() * u.adjoint();
  // Restore exact Hermiticity lost to round-off.
  out = (out + out.adjoint()).eval() / 2.0;
  return DensityMatrix(std::move(out));
}

double fringe(const InterferometerConfig& cfg, const SpinState& state, Axis axis,
              Outcome outcome) {
  const DensityMatrix rho_f = evolve(cfg, state.density());
  const ComplexMatrix projector =
      (identity<double>(2) + sign_of(outcome) * pauli<double>(axis_index(axis))) / 2.0;
  return (projector * rho_f.matrix()).trace().real();
}

double fitted_fringe_visibility(const InterferometerConfig& cfg, const SpinState& state,
                                Axis axis, int samples) {
  if (samples < 3) throw DomainError("fringe fit needs at least 3 phase samples");
  double a0 = 0.0, a1 = 0.0, b1 = 0.0;
  InterferometerConfig scan = cfg;
  for (int j = 0; j < samples; ++j) {
    scan.chi = 2.0 * kPi * j / samples;
    const double p = fringe(scan, state, axis, Outcome::Plus);
    a0 += p;
    a1 += p * std::cos(scan.chi);
    b1 += p * std::sin(scan.chi);
  }
  a0 /= samples;
  a1 *= 2.0 / samples;
  b1 *= 2.0 / samples;
  if (a0 < 1e-12) return 0.0;  // dark port
  return std::hypot(a1, b1) / a0;
}

double which_way_predictability(const InterferometerConfig& cfg, const SpinState& state) {
  return std::abs(fringe(cfg, state, Axis::Z, Outcome::Plus) -
                  fringe(cfg, state, Axis::Z, Outcome::Minus));
}

Vec3 phase_axis(double chi) { return {std::cos(chi), -std::sin(chi), 0.0}; }

double asymmetric_intensity(const InterferometerConfig& cfg, const SpinState& state,
                            Outcome outcome) {
  const Complementarity vp = cfg.complementarity();
  const double projection = phase_axis(cfg.chi + cfg.chi_sp).dot(state.bloch());
  return (cfg.weight_a + cfg.weight_b) * (1.0 - sign_of(outcome) * vp.visibility * projection);
}

}  // namespace hyperon
