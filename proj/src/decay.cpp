// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include "hyperon/decay.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hyperon {

namespace {

constexpr double kIdentityTol = 1e-12;

DecayParameters from_components(double alpha, double beta, double gamma) {
  DecayParameters p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.phi = std::atan2(beta, gamma);
  p.chi_sp = std::atan2(beta, alpha);
  p.visibility = std::hypot(alpha, beta);
  p.predictability = std::abs(gamma);
  return p;
}

void require_close(double a, double b, const char* what) {
  if (!(std::abs(a - b) <= kIdentityTol))
    throw DomainError(std::string("decay parameters violate ") + what);
}

}  // namespace

void DecayAmplitudes::validate() const {
  if (!std::isfinite(norm2()) || !(norm2() > 0.0))
    throw DomainError("decay amplitudes S and P both vanish");
}

double DecayParameters::tabulated_phase() const {
  constexpr double half_pi = std::numbers::pi / 2.0;
  double folded = chi_sp;
  if (folded > half_pi) folded -= std::numbers::pi;
  if (folded <= -half_pi) folded += std::numbers::pi;
  return folded;
}

void DecayParameters::validate() const {
  for (double v : {alpha, beta, gamma})
    if (!(v >= -1.0 - kIdentityTol && v <= 1.0 + kIdentityTol))
      throw DomainError("decay parameter outside [-1, 1]");
  require_close(alpha * alpha + beta * beta + gamma * gamma, 1.0, "alpha^2+beta^2+gamma^2 = 1");
  require_close(visibility * visibility + predictability * predictability, 1.0, "V^2+P^2 = 1");
  require_close(alpha, visibility * std::cos(chi_sp), "alpha = V cos chi_SP");
  require_close(beta, visibility * std::sin(chi_sp), "beta = V sin chi_SP");
  const double root = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  require_close(beta, root * std::sin(phi), "beta = sqrt(1-alpha^2) sin phi");
  require_close(gamma, root * std::cos(phi), "gamma = sqrt(1-alpha^2) cos phi");
  require_close(predictability, std::abs(gamma), "P = |gamma|");
}

DecayParameters params_from_amplitudes(const DecayAmplitudes& a) {
  a.validate();
  const double n2 = a.norm2();
  const std::complex<double> interference = std::conj(a.s) * a.p;
  return from_components(2.0 * interference.real() / n2, 2.0 * interference.imag() / n2,
                         (std::norm(a.s) - std::norm(a.p)) / n2);
}

DecayParameters params_from_alpha_phi(double alpha, double phi, GammaSign gamma_sign) {
  if (!(std::abs(alpha) <= 1.0)) throw DomainError("|alpha| must not exceed 1");
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  const double root = std::sqrt(1.0 - alpha * alpha);
  const double beta = root * std::sin(phi);
  const double gamma = root * std::cos(phi);
  const bool want_positive = gamma_sign == GammaSign::Plus;
  if (gamma != 0.0 && (gamma > 0.0) != want_positive)
    throw DomainError("sign of gamma implied by phi contradicts the declared gamma sign");
  DecayParameters p = from_components(alpha, beta, gamma);
  p.phi = phi;
  return p;
}

DecayAmplitudes amplitudes_from_params(const DecayParameters& params) {
  const double s2 = std::clamp((1.0 + params.gamma) / 2.0, 0.0, 1.0);
  const double s = std::sqrt(s2);
  if (s < 1e-300) return {0.0, 1.0};
  // S* P = (alpha + i beta) / 2 with S real.
  return {s, std::complex<double>(params.alpha, params.beta) / (2.0 * s)};
}

void DecayChannel::validate() const {
  if (!(branching >= 0.0 && branching <= 1.0))
    throw DomainError("branching fraction outside [0, 1]");
  if (spin != 0.5) throw DomainError("only spin-1/2 decay channels can be constructed");
  params.validate();
}

ComplexMatrix transition_matrix(const DecayAmplitudes& a, const Vec3& n) {
  require_unit(n, "decay direction");
  return a.s * identity<double>(2) + a.p * dot_sigma<double>(n);
}

void KrausPair::validate() const {
  if (!(omega_plus >= 0.0 && omega_minus >= 0.0))
    throw DomainError("Kraus weights must be nonnegative");
  require_close(omega_plus + omega_minus, 1.0, "omega_+ + omega_- = 1");
  require_close(w1.dot(w2), 0.0, "w1 . w2 = 0");
  const double length = spin * (2.0 * spin + 1.0);
  require_close((w1 + w2).squaredNorm(), length, "|w1 + w2|^2 = s(2s+1)");
  require_close((w1 - w2).squaredNorm(), length, "|w1 - w2|^2 = s(2s+1)");
}

std::array<ComplexMatrix, 2> KrausPair::operators() const {
  if (spin != 0.5) throw DomainError("Kraus operators are only built for spin-1/2");
  const Projector plus = Projector::along(Vec3(w1 + w2));
  const Projector minus = Projector::along(Vec3(w1 - w2));
  return {std::sqrt(omega_plus) * plus.matrix(), std::sqrt(omega_minus) * minus.matrix()};
}

double KrausPair::intensity(const DensityMatrix& rho) const {
  double total = 0.0;
  for (const auto& k : operators()) total += (k * rho.matrix() * k.adjoint()).trace().real();
  return total;
}

KrausPair kraus_decompose(const DecayAmplitudes& a, const Vec3& n) {
  require_unit(n, "decay direction");
  const double alpha = params_from_amplitudes(a).alpha;
  KrausPair k;
  k.omega_plus = (1.0 + alpha) / 2.0;
  k.omega_minus = (1.0 - alpha) / 2.0;
  k.w1 = Vec3::Zero();
  k.w2 = n;
  return k;
}

double angular_pdf(const DecayParameters& params, const Vec3& s, const Vec3& n) {
  if (s.norm() > 1.0 + tolerance::kUnitNorm) throw DomainError("polarization longer than 1");
  return (1.0 + params.alpha * s.dot(n)) / (4.0 * std::numbers::pi);
}

}  // namespace hyperon
