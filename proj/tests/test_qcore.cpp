// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "hyperon/qcore.hpp"
#include "test_support.hpp"

using namespace hyperon;
using namespace testing;

TEST_CASE("Gell-Mann basis is traceless, Hermitian and orthogonal") {
  for (int d : {2, 3, 4}) {
    const auto basis = gell_mann_basis<double>(d);
    REQUIRE(basis.size() == static_cast<std::size_t>(d * d - 1));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(is_hermitian<double>(basis[i]));
      CHECK(std::abs(basis[i].trace()) < 1e-14);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const double expected = i == j ? 2.0 : 0.0;
        CHECK(std::abs((basis[i] * basis[j]).trace() - expected) < 1e-12);
      }
    }
  }
  const auto qubit = gell_mann_basis<double>(2);
  for (int i = 0; i < 3; ++i) CHECK(max_abs(qubit[i] - pauli<double>(i)) == 0.0);
}

TEST_CASE("DensityMatrix rejects invalid matrices") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{m}, DomainError);  // trace 2
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{m}, DomainError);  // negative eigenvalue
  ComplexMatrix h = ComplexMatrix::Identity(2, 2) / 2.0;
  h(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{h}, DomainError);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix{ComplexMatrix(2, 3)}, DimensionError);
}

TEST_CASE("bloch_expand examples") {
  const BlochVector zero = bloch_expand(DensityMatrix::maximally_mixed(2));
  CHECK(zero.components.norm() < 1e-15);

  ComplexVector up = ComplexVector::Zero(2);
  up(0) = 1.0;
  const BlochVector b = bloch_expand(DensityMatrix::pure(up));
  CHECK(b.components(0) == doctest::Approx(0.0));
  CHECK(b.components(1) == doctest::Approx(0.0));
  CHECK(b.components(2) == doctest::Approx(1.0));
}

TEST_CASE("bloch_compose examples and positivity rejection") {
  BlochVector zero{2, RVector<double>::Zero(3)};
  CHECK(max_abs(bloch_compose(zero).matrix() - ComplexMatrix::Identity(2, 2) / 2.0) < 1e-15);

  BlochVector z{2, RVector<double>(3)};
  z.components << 0, 0, 1;
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  CHECK(max_abs(bloch_compose(z).matrix() - expected) < 1e-15);

  BlochVector too_long{2, RVector<double>(3)};
  too_long.components << 0.8, 0.0, 0.8;
  CHECK_THROWS_AS(bloch_compose(too_long), DomainError);
  BlochVector wrong_size{3, RVector<double>(3)};
  CHECK_THROWS_AS(bloch_compose(wrong_size), DimensionError);
}

TEST_CASE("Bloch round trip and pure-state radius, d = 2..4") {
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 3;
    const DensityMatrix rho = random_density(d);
    const BlochVector b = bloch_expand(rho);
    CHECK(b.components.norm() <= b.pure_radius() + 1e-12);
    CHECK(max_abs(bloch_compose(b).matrix() - rho.matrix()) < 1e-12);
  }
  ComplexVector psi = ComplexVector::Zero(4);
  psi(2) = 1.0;
  const BlochVector pure = bloch_expand(DensityMatrix::pure(psi));
  CHECK(pure.components.norm() == doctest::Approx(pure.pure_radius()).epsilon(1e-12));
}

TEST_CASE("tensor product") {
  CHECK(max_abs(tensor(identity<double>(2), identity<double>(2)) - identity<double>(4)) == 0.0);
  const ComplexMatrix zz = tensor(pauli<double>(2), pauli<double>(2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1, -1, -1, 1;
  CHECK(max_abs(zz - expected) == 0.0);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_matrix(2 + trial % 2);
    const ComplexMatrix b = random_matrix(3);
    CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) < 1e-12);
  }
}

TEST_CASE("partial trace") {
  const DensityMatrix singlet = singlet_state();
  for (int traced : {0, 1})
    CHECK(max_abs(partial_trace(singlet, 2, 2, traced).matrix() - identity<double>(2) / 2.0) <
          1e-15);

  const DensityMatrix a = random_density(2);
  const DensityMatrix b = random_density(3);
  const DensityMatrix ab(tensor(a.matrix(), b.matrix()));
  CHECK(max_abs(partial_trace(ab, 2, 3, 1).matrix() - a.matrix()) < 1e-12);
  CHECK(max_abs(partial_trace(ab, 2, 3, 0).matrix() - b.matrix()) < 1e-12);

  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = random_density(4);
    CHECK(std::abs(partial_trace(rho, 2, 2, trial % 2).matrix().trace() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(partial_trace(singlet, 2, 3, 0), DimensionError);
  CHECK_THROWS_AS(partial_trace(singlet, 2, 2, 2), DimensionError);
}

TEST_CASE("two_amplitude_intensity examples") {
  const DensityMatrix rho = random_density(2);
  CHECK(two_amplitude_intensity<double>(identity<double>(2), ComplexMatrix::Zero(2, 2), rho) ==
        doctest::Approx(1.0));
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  CHECK(two_amplitude_intensity<double>(identity<double>(2), identity<double>(2), mixed) ==
        doctest::Approx(4.0));

  // Oracle: explicit entrywise sum over i, j, k, l of T_ij rho_jk conj(T_il).
  for (int trial = 0; trial < 20; ++trial) {
    const std::complex<double> s = random_complex(), p = random_complex();
    const Vec3 n = random_unit();
    const ComplexMatrix ta = s * identity<double>(2);
    const ComplexMatrix tb = p * dot_sigma<double>(n);
    const ComplexMatrix t = ta + tb;
    std::complex<double> direct = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) direct += t(i, j) * mixed.matrix()(j, l) * std::conj(t(i, l));
    const double value = two_amplitude_intensity<double>(ta, tb, mixed);
    CHECK(value == doctest::Approx(direct.real()).epsilon(1e-12));
    CHECK(value == doctest::Approx(std::norm(s) + std::norm(p)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(two_amplitude_intensity<double>(identity<double>(3), identity<double>(2), rho),
                  DimensionError);
}

TEST_CASE("two_amplitude_intensity is real and nonnegative (property)") {
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + trial % 3;
    const ComplexMatrix ta = random_matrix(d), tb = random_matrix(d);
    const DensityMatrix rho = random_density(d);
    const ComplexMatrix t = ta + tb;
    const std::complex<double> full = (t * rho.matrix() * t.adjoint()).trace();
    CHECK(std::abs(full.imag()) < 1e-10);
    CHECK(two_amplitude_intensity<double>(ta, tb, rho) >= -1e-10);
  }
}

TEST_CASE("complementarity_of") {
  const ComplexMatrix id = identity<double>(2);
  const Complementarity balanced = complementarity_of<double>(id, pauli<double>(0));
  CHECK(balanced.visibility == doctest::Approx(1.0));
  CHECK(balanced.predictability == doctest::Approx(0.0));

  const Complementarity which_way = complementarity_of<double>(id, ComplexMatrix::Zero(2, 2));
  CHECK(which_way.visibility == 0.0);
  CHECK(which_way.predictability == 1.0);

  // Splitting with V = 0.648: ratio r = b/a solves 2r/(1+r^2) = 0.648.
  const double r = (1.0 - std::sqrt(1.0 - 0.648 * 0.648)) / 0.648;
  const Complementarity lambda = complementarity_of<double>(id, r * pauli<double>(2));
  CHECK(lambda.visibility == doctest::Approx(0.648).epsilon(1e-12));
  CHECK(lambda.predictability == doctest::Approx(0.762).epsilon(1e-3));

  CHECK(scaled_norm<double>(identity<double>(3)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(complementarity_of<double>(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)),
                  DomainError);
}

TEST_CASE("V^2 + P^2 = 1 for random amplitude pairs (property)") {
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + trial % 3;
    const Complementarity c = complementarity_of<double>(random_matrix(d), random_matrix(d));
    CHECK(std::abs(c.visibility * c.visibility + c.predictability * c.predictability - 1.0) <
          1e-12);
  }
}

TEST_CASE("float instantiation compiles and agrees") {
  const auto basis = gell_mann_basis<float>(3);
  CHECK(basis.size() == 8u);
  const auto c = complementarity_from_norms<float>(1.0f, 1.0f);
  CHECK(c.visibility == doctest::Approx(1.0f));
}
