// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Spin-1/2 nonleptonic decay as a two-amplitude process T = S 1 + P n.sigma
// and as a two-outcome Kraus channel: the parent spin is projected onto +n or
// -n with probabilities (1 +- alpha)/2.
#pragma once

#include <array>
#include <complex>
#include <string>

#include "hyperon/qcore.hpp"

namespace hyperon {

/// S-wave (parity violating) and P-wave (parity conserving) amplitudes.
struct DecayAmplitudes {
  std::complex<double> s;
  std::complex<double> p;

  double norm2() const { return std::norm(s) + std::norm(p); }
  void validate() const;
};

/// alpha, beta, gamma decay parameters plus the interferometric reading
/// V = sqrt(alpha^2 + beta^2), P = |gamma|, chi_SP = arg(S* P).
struct DecayParameters {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 1.0;
  double phi = 0.0;     ///< beta = sqrt(1-alpha^2) sin phi, gamma = sqrt(1-alpha^2) cos phi
  double chi_sp = 0.0;  ///< atan2(beta, alpha); alpha = V cos chi_SP, beta = V sin chi_SP
  double visibility = 0.0;
  double predictability = 1.0;

  /// chi_SP folded into (-pi/2, pi/2], i.e. atan(beta/alpha). This is the
  /// phase shift as tabulated, which does not carry the sign of alpha.
  double tabulated_phase() const;

  /// Throws DomainError unless every identity between the fields holds to 1e-12.
  void validate() const;
};

enum class GammaSign { Plus, Minus };

DecayParameters params_from_amplitudes(const DecayAmplitudes& a);

/// Builds the record from the measured (alpha, phi). gamma_sign is the
/// expected sign of gamma and must agree with cos(phi) unless gamma = 0.
DecayParameters params_from_alpha_phi(double alpha, double phi,
                                      GammaSign gamma_sign = GammaSign::Plus);

/// Inverse of params_from_amplitudes with S real, S >= 0 and |S|^2+|P|^2 = 1.
DecayAmplitudes amplitudes_from_params(const DecayParameters& params);

/// One tabulated decay mode.
struct DecayChannel {
  std::string parent;
  std::string daughters;
  double spin = 0.5;
  double branching = 1.0;
  DecayParameters params;

  void validate() const;
};

/// T(n) = S 1 + P n.sigma.
ComplexMatrix transition_matrix(const DecayAmplitudes& a, const Vec3& n);

/// K_+- = sqrt(omega_+-) Pi_{w1 +- w2}, omega_+ + omega_- = 1.
struct KrausPair {
  double omega_plus = 0.5;
  double omega_minus = 0.5;
  Vec3 w1 = Vec3::Zero();
  Vec3 w2 = Vec3::UnitZ();
  double spin = 0.5;

  void validate() const;
  std::array<ComplexMatrix, 2> operators() const;
  /// Tr(K_+ rho K_+) + Tr(K_- rho K_-) = (1 + (w1 + (omega_+ - omega_-) w2).s) / (2s+1).
  double intensity(const DensityMatrix& rho) const;
};

/// Spin-1/2 decomposition: w1 = 0, w2 = n, omega_+- = (1 +- alpha)/2. The
/// normalizations relate as Tr(T rho T^dagger) = 2 (|S|^2+|P|^2) * intensity(rho).
KrausPair kraus_decompose(const DecayAmplitudes& a, const Vec3& n);

/// Normalized daughter direction density (1 + alpha s.n) / (4 pi), per steradian.
double angular_pdf(const DecayParameters& params, const Vec3& s, const Vec3& n);

}  // namespace hyperon
