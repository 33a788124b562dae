// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense complex-matrix foundation: density matrices, generalized Gell-Mann
// Bloch expansions, Kronecker products, partial traces and the generic
// two-amplitude intensity with its visibility/predictability split.
//
// Everything is templated on the real scalar type; the double aliases at the
// bottom are what the rest of the library uses.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "hyperon/errors.hpp"

namespace hyperon {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <typename Real>
using Vector3 = Eigen::Matrix<Real, 3, 1>;

namespace tolerance {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
/// Smallest eigenvalue still accepted as positive semidefinite.
inline constexpr double kNegativeEigenvalue = -1e-10;
inline constexpr double kUnitNorm = 1e-12;
}  // namespace tolerance

template <typename Real>
CMatrix<Real> identity(int dim) {
  return CMatrix<Real>::Identity(dim, dim);
}

/// Pauli matrix for axis 0, 1, 2 (x, y, z).
template <typename Real>
CMatrix<Real> pauli(int axis) {
  using C = std::complex<Real>;
  CMatrix<Real> m = CMatrix<Real>::Zero(2, 2);
  switch (axis) {
    case 0:
      m(0, 1) = m(1, 0) = C(1);
      break;
    case 1:
      m(0, 1) = C(0, -1);
      m(1, 0) = C(0, 1);
      break;
    case 2:
      m(0, 0) = C(1);
      m(1, 1) = C(-1);
      break;
    default:
      throw DomainError("pauli: axis must be 0, 1 or 2");
  }
  return m;
}

/// n.sigma for a real 3-vector (not required to be unit).
template <typename Real, typename Derived>
CMatrix<Real> dot_sigma(const Eigen::MatrixBase<Derived>& n) {
  return pauli<Real>(0) * n(0) + pauli<Real>(1) * n(1) + pauli<Real>(2) * n(2);
}

/// Generalized Gell-Mann matrices for dimension d: all symmetric, then all
/// antisymmetric off-diagonal generators (pairs j<k in row-major order), then
/// the d-1 diagonal ones. Normalized so Tr(G_i G_j) = 2 delta_ij; for d = 2
/// this is (sigma_x, sigma_y, sigma_z).
template <typename Real>
std::vector<CMatrix<Real>> gell_mann_basis(int dim) {
  using C = std::complex<Real>;
  if (dim < 1) throw DimensionError("gell_mann_basis: dimension must be positive");
  std::vector<CMatrix<Real>> basis;
  basis.reserve(static_cast<std::size_t>(dim * dim - 1));
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix<Real> m = CMatrix<Real>::Zero(dim, dim);
      m(j, k) = m(k, j) = C(1);
      basis.push_back(std::move(m));
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix<Real> m = CMatrix<Real>::Zero(dim, dim);
      m(j, k) = C(0, -1);
      m(k, j) = C(0, 1);
      basis.push_back(std::move(m));
    }
  }
  for (int l = 1; l < dim; ++l) {
    CMatrix<Real> m = CMatrix<Real>::Zero(dim, dim);
    const Real scale = std::sqrt(Real(2) / Real(l * (l + 1)));
    for (int j = 0; j < l; ++j) m(j, j) = C(scale);
    m(l, l) = C(-scale * Real(l));
    basis.push_back(std::move(m));
  }
  return basis;
}

template <typename Real>
bool is_hermitian(const CMatrix<Real>& m, Real tol = Real(tolerance::kHermitian)) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// Eigenvalues of the Hermitian part, ascending.
template <typename Real>
RVector<Real> hermitian_eigenvalues(const CMatrix<Real>& m) {
  const CMatrix<Real> h = (m + m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Square, Hermitian, unit-trace, positive semidefinite matrix.
template <typename Real>
class BasicDensityMatrix {
 public:
  explicit BasicDensityMatrix(CMatrix<Real> m) : m_(std::move(m)) { validate(); }

  static BasicDensityMatrix maximally_mixed(int dim) {
    return BasicDensityMatrix(identity<Real>(dim) / Real(dim));
  }

  static BasicDensityMatrix pure(const CVector<Real>& psi) {
    const Real norm = psi.norm();
    if (!(norm > Real(0))) throw DomainError("pure state vector has zero norm");
    const CVector<Real> unit = psi / norm;
    return BasicDensityMatrix(unit * unit.adjoint());
  }

  /// Spin-1/2 state (1 + s.sigma)/2; requires |s| <= 1.
  template <typename Derived>
  static BasicDensityMatrix qubit(const Eigen::MatrixBase<Derived>& s) {
    if (s.norm() > Real(1) + Real(tolerance::kUnitNorm))
      throw DomainError("qubit Bloch vector longer than 1");
    return BasicDensityMatrix((identity<Real>(2) + dot_sigma<Real>(s)) / Real(2));
  }

  const CMatrix<Real>& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }

 private:
  void validate() const {
    if (m_.rows() == 0 || m_.rows() != m_.cols())
      throw DimensionError("density matrix must be square and non-empty");
    if (!m_.allFinite()) throw DomainError("density matrix has non-finite entries");
    if (!is_hermitian<Real>(m_)) throw DomainError("density matrix is not Hermitian");
    const std::complex<Real> tr = m_.trace();
    if (std::abs(tr - std::complex<Real>(1)) > Real(tolerance::kTrace))
      throw DomainError("density matrix trace differs from 1");
    const Real lowest = hermitian_eigenvalues<Real>(m_).minCoeff();
    if (lowest < Real(tolerance::kNegativeEigenvalue))
      throw DomainError("density matrix has negative eigenvalue " + std::to_string(lowest));
  }

  CMatrix<Real> m_;
};

/// Coefficients b of rho = (1/d)(1 + b.Gamma) in the Gell-Mann basis above.
template <typename Real>
struct BasicBlochVector {
  int dim = 2;
  RVector<Real> components;

  /// Largest admissible length, attained by pure states: sqrt(d(d-1)/2).
  Real pure_radius() const { return std::sqrt(Real(dim * (dim - 1)) / Real(2)); }
};

/// Hermitian idempotent.
template <typename Real>
class BasicProjector {
 public:
  explicit BasicProjector(CMatrix<Real> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionError("projector must be square");
    if (!is_hermitian<Real>(m_)) throw DomainError("projector is not Hermitian");
    if ((m_ * m_ - m_).cwiseAbs().maxCoeff() > Real(tolerance::kHermitian))
      throw DomainError("projector is not idempotent");
  }

  /// Spin-1/2 projector onto the direction n: (1 + n.sigma)/2.
  template <typename Derived>
  static BasicProjector along(const Eigen::MatrixBase<Derived>& n) {
    if (std::abs(n.norm() - Real(1)) > Real(tolerance::kUnitNorm))
      throw DomainError("projector direction must be a unit vector");
    return BasicProjector((identity<Real>(2) + dot_sigma<Real>(n)) / Real(2));
  }

  const CMatrix<Real>& matrix() const noexcept { return m_; }

 private:
  CMatrix<Real> m_;
};

template <typename Real>
BasicBlochVector<Real> bloch_expand(const BasicDensityMatrix<Real>& rho) {
  const int d = rho.dim();
  const auto basis = gell_mann_basis<Real>(d);
  BasicBlochVector<Real> b{d, RVector<Real>(static_cast<Eigen::Index>(basis.size()))};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    b.components(static_cast<Eigen::Index>(i)) =
        Real(d) / Real(2) * (basis[i] * rho.matrix()).trace().real();
  }
  return b;
}

template <typename Real>
BasicDensityMatrix<Real> bloch_compose(const BasicBlochVector<Real>& b) {
  const int d = b.dim;
  if (d < 1 || b.components.size() != d * d - 1)
    throw DimensionError("Bloch vector length must be d^2 - 1");
  const auto basis = gell_mann_basis<Real>(d);
  CMatrix<Real> m = identity<Real>(d);
  for (std::size_t i = 0; i < basis.size(); ++i)
    m += basis[i] * b.components(static_cast<Eigen::Index>(i));
  m /= Real(d);
  const Real lowest = hermitian_eigenvalues<Real>(m).minCoeff();
  if (lowest < Real(tolerance::kNegativeEigenvalue)) {
    throw DomainError("Bloch vector of length " + std::to_string(b.components.norm()) +
                      " gives eigenvalue " + std::to_string(lowest) +
                      " (pure-state radius " + std::to_string(b.pure_radius()) + ")");
  }
  return BasicDensityMatrix<Real>(std::move(m));
}

template <typename Real>
CMatrix<Real> tensor(const CMatrix<Real>& a, const CMatrix<Real>& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

/// Reduced state of a bipartite rho on C^{d1} (x) C^{d2}. `traced` selects the
/// factor that is summed out (0 = first, 1 = second).
template <typename Real>
BasicDensityMatrix<Real> partial_trace(const BasicDensityMatrix<Real>& rho, int d1, int d2,
                                       int traced) {
  if (d1 < 1 || d2 < 1 || d1 * d2 != rho.dim())
    throw DimensionError("partial_trace: factor dimensions do not match the state");
  if (traced != 0 && traced != 1)
    throw DimensionError("partial_trace: subsystem index must be 0 or 1");
  const auto& m = rho.matrix();
  const int keep = traced == 0 ? d2 : d1;
  const int sum = traced == 0 ? d1 : d2;
  CMatrix<Real> out = CMatrix<Real>::Zero(keep, keep);
  for (int i = 0; i < keep; ++i) {
    for (int j = 0; j < keep; ++j) {
      for (int k = 0; k < sum; ++k) {
        out(i, j) += traced == 0 ? m(k * d2 + i, k * d2 + j) : m(i * d2 + k, j * d2 + k);
      }
    }
  }
  return BasicDensityMatrix<Real>(std::move(out));
}

/// Tr((Ta + Tb) rho (Ta + Tb)^dagger).
template <typename Real>
Real two_amplitude_intensity(const CMatrix<Real>& ta, const CMatrix<Real>& tb,
                             const BasicDensityMatrix<Real>& rho) {
  if (ta.rows() != rho.dim() || ta.cols() != rho.dim() || tb.rows() != rho.dim() ||
      tb.cols() != rho.dim())
    throw DimensionError("two_amplitude_intensity: dimension mismatch");
  const CMatrix<Real> t = ta + tb;
  return (t * rho.matrix() * t.adjoint()).trace().real();
}

/// Frobenius norm scaled so that the identity has norm 1 in every dimension:
/// ||T|| = sqrt(Tr(T^dagger T) / d).
template <typename Real>
Real scaled_norm(const CMatrix<Real>& t) {
  if (t.rows() == 0) return Real(0);
  return t.norm() / std::sqrt(Real(t.rows()));
}

template <typename Real>
struct BasicComplementarity {
  Real visibility;
  Real predictability;
};

/// Visibility 2ab/(a^2+b^2) and predictability |a^2-b^2|/(a^2+b^2) of two
/// amplitudes with norms a and b.
template <typename Real>
BasicComplementarity<Real> complementarity_from_norms(Real a, Real b) {
  const Real total = a * a + b * b;
  if (!(total > Real(0))) throw DomainError("complementarity: both amplitudes vanish");
  return {Real(2) * a * b / total, std::abs(a * a - b * b) / total};
}

template <typename Real>
BasicComplementarity<Real> complementarity_of(const CMatrix<Real>& ta, const CMatrix<Real>& tb) {
  return complementarity_from_norms(scaled_norm(ta), scaled_norm(tb));
}

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using Vec3 = Vector3<double>;
using DensityMatrix = BasicDensityMatrix<double>;
using BlochVector = BasicBlochVector<double>;
using Projector = BasicProjector<double>;
using Complementarity = BasicComplementarity<double>;

/// The singlet (|ud> - |du>)/sqrt(2) as a two-qubit density matrix.
inline DensityMatrix singlet_state() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(psi);
}

/// Unit vector with polar angle theta and azimuth phi.
inline Vec3 unit_vector(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

inline bool is_unit(const Vec3& n, double tol = tolerance::kUnitNorm) {
  return std::abs(n.norm() - 1.0) <= tol;
}

inline void require_unit(const Vec3& n, const char* what) {
  if (!is_unit(n)) throw DomainError(std::string(what) + " must be a unit vector");
}

}  // namespace hyperon
