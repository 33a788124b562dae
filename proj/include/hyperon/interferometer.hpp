// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Spin-1/2 particle through beam splitter, phase shifter, beam splitter:
//   U_IF(chi) = U_BS U_phase(chi) U_BS,
//   U_BS = exp(-i pi sigma_y / 4),  U_phase(chi) = exp(-i chi sigma_x / 2).
//
// Phase-axis convention. The asymmetric-splitter intensity is written with a
// projection "n(0, chi_SP) . s". We read n(0, chi) as the in-plane unit
// vector (cos chi, -sin chi, 0), so that for s = s(theta, phi)
//   n(0, chi) . s = |s| sin(theta) cos(phi + chi),
// the same cos(phi + chi) dependence as the symmetric fringe. See phase_axis().
#pragma once

#include "hyperon/qcore.hpp"

namespace hyperon {

/// Polarization s = purity * (sin t cos p, sin t sin p, cos t).
class SpinState {
 public:
  SpinState(double theta, double phi, double purity = 1.0);

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  double purity() const noexcept { return purity_; }
  Vec3 bloch() const { return purity_ * unit_vector(theta_, phi_); }
  DensityMatrix density() const { return DensityMatrix::qubit(bloch()); }

 private:
  double theta_;
  double phi_;
  double purity_;
};

struct InterferometerConfig {
  double chi = 0.0;      ///< relative phase in the symmetric interferometer
  double weight_a = 1.0; ///< ||Ta||^2 share of the splitting
  double weight_b = 1.0; ///< ||Tb||^2 share of the splitting
  double chi_sp = 0.0;   ///< phase of the asymmetric-arm observable

  void validate() const;
  /// Visibility and predictability implied by the splitting.
  Complementarity complementarity() const;
};

enum class Axis { X, Y, Z };
enum class Outcome { Plus, Minus };

ComplexMatrix beam_splitter();
ComplexMatrix phase_shifter(double chi);
ComplexMatrix interferometer_unitary(double chi);

/// U_IF rho U_IF^dagger; qubits only.
DensityMatrix evolve(const InterferometerConfig& cfg, const DensityMatrix& rho);

/// Tr((1 +- sigma_axis)/2 rho_f). For axis x this is 1/2 (1 -+ sin t cos(p + chi)).
double fringe(const InterferometerConfig& cfg, const SpinState& state, Axis axis,
              Outcome outcome);

/// Contrast of fringe(+) as chi sweeps a uniform grid, from a first-harmonic
/// least-squares fit: sqrt(a1^2 + b1^2) / a0. Equals |s| sin(theta) on x/y.
double fitted_fringe_visibility(const InterferometerConfig& cfg, const SpinState& state,
                                Axis axis, int samples = 64);

/// Which-way knowledge |P(+z) - P(-z)| after the interferometer.
double which_way_predictability(const InterferometerConfig& cfg, const SpinState& state);

/// n(0, chi) = (cos chi, -sin chi, 0); see the header comment.
Vec3 phase_axis(double chi);

/// (||Ta||^2 + ||Tb||^2)(1 -+ V n(0, chi + chi_SP) . s) for the asymmetric
/// splitter, with V from the splitting.
double asymmetric_intensity(const InterferometerConfig& cfg, const SpinState& state,
                            Outcome outcome);

}  // namespace hyperon
