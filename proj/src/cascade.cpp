// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include "hyperon/cascade.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hyperon {

namespace {

constexpr double kBoundTol = 1e-12;

KrausPair single_kraus(const DecayParameters& params, const Vec3& n) {
  KrausPair k;
  k.omega_plus = (1.0 + params.alpha) / 2.0;
  k.omega_minus = (1.0 - params.alpha) / 2.0;
  k.w2 = n;
  return k;
}

}  // namespace

CascadeKraus cascade_tau(const DecayParameters& mu, const DecayParameters& nu, const Vec3& n_mu,
                         const Vec3& n_nu) {
  require_unit(n_mu, "cascade direction n_mu");
  require_unit(n_nu, "cascade direction n_nu");
  const double c = n_mu.dot(n_nu);
  CascadeKraus k;
  k.n_mu = n_mu;
  k.n_nu = n_nu;
  k.tau0 = 1.0 + mu.alpha * nu.alpha * c;
  k.tau = (mu.alpha + nu.alpha * (1.0 - mu.gamma) * c) * n_mu + nu.alpha * mu.gamma * n_nu +
          nu.alpha * mu.beta * n_mu.cross(n_nu);
  const double length = k.tau.norm();
  if (length > k.tau0 + kBoundTol) {
    std::ostringstream msg;
    msg << "cascade axis longer than tau0: |tau| = " << length << ", tau0 = " << k.tau0;
    throw DomainError(msg.str());
  }
  if (k.tau0 > 0.0) {
    const double ratio = std::min(1.0, length / k.tau0);
    k.omega_plus = (1.0 + ratio) / 2.0;
    k.omega_minus = (1.0 - ratio) / 2.0;
  }
  return k;
}

double cascade_pdf(const DecayParameters& mu, const DecayParameters& nu, const Vec3& s,
                   const Vec3& n_mu, const Vec3& n_nu) {
  if (s.norm() > 1.0 + tolerance::kUnitNorm) throw DomainError("polarization longer than 1");
  constexpr double four_pi = 4.0 * std::numbers::pi;
  return cascade_tau(mu, nu, n_mu, n_nu).intensity(s) / (four_pi * four_pi);
}

Vec3 large_predictability_axis(const DecayParameters& mu, const DecayParameters& nu,
                               const Vec3& n_mu, const Vec3& n_nu) {
  return mu.alpha * n_mu + nu.alpha * n_nu;
}

Vec3 daughter_polarization(const DecayParameters& mu, const Vec3& s, const Vec3& n_mu) {
  const double ns = n_mu.dot(s);
  const Vec3 numerator = (mu.alpha + ns) * n_mu + mu.beta * s.cross(n_mu) +
                         mu.gamma * (s - ns * n_mu);
  return numerator / (1.0 + mu.alpha * ns);
}

double product_kraus_intensity(const DecayParameters& mu, const DecayParameters& nu,
                               const DensityMatrix& rho, const Vec3& n_mu, const Vec3& n_nu) {
  const auto first = single_kraus(mu, n_mu).operators();
  const auto second = single_kraus(nu, n_nu).operators();
  double total = 0.0;
  for (const auto& b : first) {
    for (const auto& a : second) {
      const ComplexMatrix k = a * b;
      total += (k * rho.matrix() * k.adjoint()).trace().real();
    }
  }
  return 4.0 * total;
}

}  // namespace hyperon
