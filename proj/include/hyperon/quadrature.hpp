// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace hyperon {

namespace detail {
template <typename T>
auto evaluated(const T& value) {
  if constexpr (requires { value.eval(); }) {
    return value.eval();
  } else {
    return value;
  }
}
}  // namespace detail

/// Gauss-Legendre nodes and weights on [-1, 1].
template <typename Real>
struct GaussLegendre {
  std::vector<Real> nodes;
  std::vector<Real> weights;

  explicit GaussLegendre(int order) : nodes(order), weights(order) {
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
      Real x = std::cos(std::numbers::pi_v<Real> * (Real(i) + Real(0.75)) /
                        (Real(order) + Real(0.5)));
      Real dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        Real p0 = 1, p1 = x;
        for (int k = 2; k <= order; ++k) {
          const Real p2 = (Real(2 * k - 1) * x * p1 - Real(k - 1) * p0) / Real(k);
          p0 = p1;
          p1 = p2;
        }
        dp = Real(order) * (x * p1 - p0) / (x * x - Real(1));
        const Real step = p1 / dp;
        x -= step;
        if (std::abs(step) < Real(1e-15)) break;
      }
      const Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
      nodes[i] = -x;
      nodes[order - 1 - i] = x;
      weights[i] = weights[order - 1 - i] = w;
    }
  }
};

/// Product rule on the unit sphere: Gauss-Legendre in cos(theta) times a
/// uniform azimuth grid. Weights sum to 4 pi.
template <typename Real>
struct SphereQuadrature {
  std::vector<Eigen::Matrix<Real, 3, 1>> points;
  std::vector<Real> weights;

  SphereQuadrature(int polar_order = 64, int azimuth_order = 64) {
    const GaussLegendre<Real> gl(polar_order);
    const Real dphi = Real(2) * std::numbers::pi_v<Real> / Real(azimuth_order);
    for (int i = 0; i < polar_order; ++i) {
      const Real c = gl.nodes[i];
      const Real s = std::sqrt(std::max(Real(0), Real(1) - c * c));
      for (int j = 0; j < azimuth_order; ++j) {
        const Real phi = dphi * (Real(j) + Real(0.5));
        points.emplace_back(s * std::cos(phi), s * std::sin(phi), c);
        weights.push_back(gl.weights[i] * dphi);
      }
    }
  }

  /// Integral of f(n) over the sphere. f may return any type closed under
  /// addition and scalar multiplication (scalars, Eigen matrices).
  template <typename F>
  auto integrate(F&& f) const {
    auto total = detail::evaluated(f(points[0]) * weights[0]);
    for (std::size_t i = 1; i < points.size(); ++i) total += detail::evaluated(f(points[i]) * weights[i]);
    return total;
  }
};

}  // namespace hyperon
