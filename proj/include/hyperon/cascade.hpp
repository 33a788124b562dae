// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Two sequential spin-1/2 decays mu -> nu -> baryon. With normalized
// amplitudes the joint intensity is tau0 + tau.s, i.e. a single two-outcome
// channel with quantization axis tau and weights (1 +- |tau|/tau0)/2:
//   tau0 = 1 + a_mu a_nu (n_mu.n_nu)
//   tau  = (a_mu + a_nu (1 - g_mu) n_mu.n_nu) n_mu + a_nu g_mu n_nu
//          + a_nu b_mu (n_mu x n_nu)
// where g_mu is the signed gamma of the first decay (its predictability when
// gamma >= 0). Both directions are given in one common frame.
#pragma once

#include "hyperon/decay.hpp"

namespace hyperon {

struct CascadeKraus {
  double tau0 = 1.0;
  Vec3 tau = Vec3::Zero();
  double omega_plus = 0.5;
  double omega_minus = 0.5;
  Vec3 n_mu = Vec3::UnitZ();
  Vec3 n_nu = Vec3::UnitZ();

  /// tau0 + tau.s, the unnormalized joint intensity for polarization s.
  double intensity(const Vec3& s) const { return tau0 + tau.dot(s); }
};

/// Throws DomainError for non-unit directions, and if |tau| exceeds tau0.
CascadeKraus cascade_tau(const DecayParameters& mu, const DecayParameters& nu, const Vec3& n_mu,
                         const Vec3& n_nu);

/// Joint density of (n_mu, n_nu) over both unit spheres: (tau0 + tau.s) / (4 pi)^2.
double cascade_pdf(const DecayParameters& mu, const DecayParameters& nu, const Vec3& s,
                   const Vec3& n_mu, const Vec3& n_nu);

/// a_mu n_mu + a_nu n_nu, the axis tau tends to when P_mu is close to 1.
Vec3 large_predictability_axis(const DecayParameters& mu, const DecayParameters& nu,
                               const Vec3& n_mu, const Vec3& n_nu);

/// Polarization of the intermediate hyperon after the first decay into n_mu:
/// [(a + n.s) n + b (s x n) + g (s - (n.s) n)] / (1 + a n.s).
Vec3 daughter_polarization(const DecayParameters& mu, const Vec3& s, const Vec3& n_mu);

/// The intensity obtained by naively chaining the two single-decay Kraus
/// channels, 4 sum_{a,b} Tr(K^nu_a K^mu_b rho K^mu_b K^nu_a). Differs from
/// cascade_tau(...).intensity(s) for polarized states: the cascade channel is
/// not a product of the individual Kraus maps.
double product_kraus_intensity(const DecayParameters& mu, const DecayParameters& nu,
                               const DensityMatrix& rho, const Vec3& n_mu, const Vec3& n_nu);

}  // namespace hyperon
