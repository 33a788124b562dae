// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include <vector>

#include "doctest.h"
#include "hyperon/mc.hpp"
#include "hyperon/pairs.hpp"
#include "hyperon/quadrature.hpp"
#include "test_support.hpp"

using namespace hyperon;
using namespace testing;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNorm = 1.0 / (16 * kPi * kPi);

std::vector<PairEvent> simulate_pairs(double k, std::size_t count, std::uint64_t seed) {
  std::vector<PairEvent> events(count);
  for (std::size_t i = 0; i < count; ++i) {
    CounterStream stream(seed, i);
    auto [n1, n2] = sample_pair(k, stream);
    events[i] = {i, n1, n2};
  }
  return events;
}

// Eigenvalues of (1/4)(1 + sum c_i sigma_i x sigma_i) written out by hand.
double min_bell_weight(const SimplexPoint& p) {
  const double w[4] = {1 - p.c1 - p.c2 - p.c3, 1 - p.c1 + p.c2 + p.c3, 1 + p.c1 - p.c2 + p.c3,
                       1 + p.c1 + p.c2 - p.c3};
  return *std::min_element(w, w + 4) / 4.0;
}

}  // namespace

TEST_CASE("PairModel construction") {
  const PairModel m(0.642, -0.71);
  CHECK(m.k() == doctest::Approx(0.642 * -0.71));
  CHECK(m.is_singlet());
  CHECK(PairModel::from_product(0.46).k() == doctest::Approx(0.46));
  CHECK(PairModel::from_product(-0.3).k() == doctest::Approx(-0.3));
  CHECK_THROWS_AS(PairModel(1.2, 0.5), DomainError);
  CHECK_THROWS_AS(PairModel::from_product(1.5), DomainError);
  CHECK_THROWS_AS(PairModel(0.5, 0.5, DensityMatrix::maximally_mixed(2)), DimensionError);
  CHECK_FALSE(PairModel(0.5, 0.5, DensityMatrix::maximally_mixed(4)).is_singlet());
}

TEST_CASE("joint_pdf examples") {
  const PairModel none = PairModel::from_product(0.0);
  CHECK(joint_pdf(none, random_unit(), random_unit()) == doctest::Approx(kNorm));
  const PairModel lam = PairModel::from_product(0.46);
  const Vec3 n = random_unit();
  CHECK(joint_pdf(lam, n, n) == doctest::Approx(kNorm * 0.54));
  CHECK_THROWS_AS(joint_pdf(lam, Vec3(1, 1, 0), n), DomainError);
}

TEST_CASE("joint_pdf matches the tensor-product channel on the singlet") {
  for (int trial = 0; trial < 1000; ++trial) {
    const double a1 = uniform(-1, 1), a2 = uniform(-1, 1);
    const PairModel model(a1, a2);
    const Vec3 n1 = random_unit(), n2 = random_unit();
    // Explicit amplitudes with the requested asymmetries.
    const DecayAmplitudes t1 = amplitudes_from_params(params_from_alpha_phi(a1, 0.3));
    const DecayAmplitudes t2 = amplitudes_from_params(params_from_alpha_phi(a2, -1.1));
    const ComplexMatrix t = tensor(transition_matrix(t1, n1), transition_matrix(t2, n2));
    const double oracle = (t * singlet_state().matrix() * t.adjoint()).trace().real() * kNorm;
    CHECK(std::abs(joint_pdf(model, n1, n2) - oracle) < 1e-10);
  }
}

TEST_CASE("general-state path agrees with the closed form on the singlet") {
  const DensityMatrix nudged(singlet_state().matrix() * (1 - 1e-9) +
                             identity<double>(4) * (1e-9 / 4));
  for (int trial = 0; trial < 100; ++trial) {
    const double a1 = uniform(-1, 1), a2 = uniform(-1, 1);
    const Vec3 n1 = random_unit(), n2 = random_unit();
    CHECK(std::abs(joint_pdf(PairModel(a1, a2, nudged), n1, n2) -
                   joint_pdf(PairModel(a1, a2), n1, n2)) < 1e-10);
  }
  // Product state |up, up>: (1 + a1 z1)(1 + a2 z2).
  ComplexMatrix up = ComplexMatrix::Zero(4, 4);
  up(0, 0) = 1.0;
  const PairModel product(0.5, -0.4, DensityMatrix(up));
  const Vec3 n1 = random_unit(), n2 = random_unit();
  CHECK(joint_pdf(product, n1, n2) ==
        doctest::Approx(kNorm * (1 + 0.5 * n1.z()) * (1 - 0.4 * n2.z())));
}

TEST_CASE("joint_pdf normalization and moments by quadrature") {
  const SphereQuadrature<double> quad(16, 16);
  for (double k : {0.0, 0.46, -0.7, 1.0}) {
    const PairModel model = PairModel::from_product(k);
    const auto integrate2 = [&](auto&& f) {
      return quad.integrate([&](const Vec3& n1) {
        return quad.integrate([&](const Vec3& n2) { return f(n1, n2); });
      });
    };
    CHECK(std::abs(integrate2([&](const Vec3& a, const Vec3& b) { return joint_pdf(model, a, b); }) -
                   1.0) < 1e-6);
    const double dot = integrate2(
        [&](const Vec3& a, const Vec3& b) { return a.dot(b) * joint_pdf(model, a, b); });
    CHECK(std::abs(dot + k / 3) < 1e-8);
    const Eigen::Matrix3d outer = integrate2([&](const Vec3& a, const Vec3& b) -> Eigen::Matrix3d {
      return a * b.transpose() * joint_pdf(model, a, b);
    });
    CHECK((outer + (k / 9) * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("witness_value examples") {
  CHECK(witness_value(PairModel::from_product(0.46)) == doctest::Approx(1.0 / 3 - 0.46));
  CHECK(witness_value(PairModel::from_product(0.46)) == doctest::Approx(-0.1267).epsilon(1e-3));
  CHECK(std::abs(witness_value(PairModel::from_product(1.0 / 3))) < 1e-15);
  CHECK(witness_value(PairModel::from_product(0.0)) == doctest::Approx(1.0 / 3));
}

TEST_CASE("witness_estimate examples") {
  const auto events = simulate_pairs(0.46, 1000000, 7);
  const Estimate w = witness_estimate(events);
  CHECK(std::abs(w.value - (1.0 / 3 - 0.46)) < 0.01);
  CHECK(std::abs(w.value - (1.0 / 3 - 0.46)) < 5 * w.standard_error);

  std::vector<PairEvent> orthogonal(200, PairEvent{0, Vec3::UnitX(), Vec3::UnitY()});
  CHECK(witness_estimate(orthogonal).value == doctest::Approx(1.0 / 3));

  const Estimate null = witness_estimate(simulate_pairs(0.0, 100000, 8));
  CHECK(std::abs(null.value - 1.0 / 3) < 5 * null.standard_error);

  CHECK_THROWS_AS(witness_estimate(std::span(orthogonal).first(99)), DataError);
}

TEST_CASE("PairMoments merge equals sequential accumulation") {
  const auto events = simulate_pairs(0.3, 1000, 9);
  const PairMoments all = accumulate(events);
  PairMoments left = accumulate(std::span(events).first(400));
  left.merge(accumulate(std::span(events).subspan(400)));
  CHECK(left.count() == all.count());
  CHECK(left.dot().value == doctest::Approx(all.dot().value).epsilon(1e-12));
  CHECK(left.dot().standard_error == doctest::Approx(all.dot().standard_error).epsilon(1e-10));
  CHECK((left.outer_mean() - all.outer_mean()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("correlation_estimate examples") {
  const auto singlet = simulate_pairs(1.0, 1000000, 11);
  const CorrelationEstimate renorm =
      correlation_estimate(singlet, PairModel::from_product(1.0), true);
  CHECK_FALSE(renorm.bell_admissible);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(renorm.value(i, i) + 1.0) < 0.02);
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(std::abs(renorm.value(i, j)) < 5 * renorm.standard_error(i, j));
  }

  const auto lam = simulate_pairs(0.46, 1000000, 12);
  const CorrelationEstimate raw = correlation_estimate(lam, PairModel::from_product(0.46), false);
  CHECK(raw.bell_admissible);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(raw.value(i, i) + 0.46) < 0.01);

  const auto flat = simulate_pairs(0.0, 100000, 13);
  const CorrelationEstimate zero = correlation_estimate(flat, PairModel::from_product(0.0), false);
  CHECK((zero.value.cwiseAbs().array() < 5 * zero.standard_error.array()).all());
  CHECK_THROWS_AS(correlation_estimate(flat, PairModel::from_product(0.0), true), DomainError);
  CHECK_THROWS_AS(correlation_estimate(std::span(flat).first(10), PairModel::from_product(0.1), false),
                  DataError);
}

TEST_CASE("collect_pairs") {
  std::vector<EventRecord> records{{0, Role::Pair1, "ll", Vec3::UnitX()},
                                   {0, Role::Pair2, "ll", Vec3::UnitY()},
                                   {1, Role::Pair1, "ll", Vec3::UnitZ()},
                                   {1, Role::Pair2, "ll", -Vec3::UnitZ()}};
  const auto pairs = collect_pairs(records);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[1].event_id == 1);
  CHECK(pairs[1].n2 == -Vec3::UnitZ());

  records[3].event_id = 5;
  CHECK_THROWS_AS(collect_pairs(records), DataError);
  records[3] = {1, Role::Single, "ll", Vec3::UnitZ()};
  CHECK_THROWS_AS(collect_pairs(records), DataError);
  records.pop_back();
  CHECK_THROWS_AS(collect_pairs(records), DataError);
}

TEST_CASE("simplex geometry examples") {
  const SimplexPoint corner = SimplexPoint::singlet();
  const SimplexPoint shrunk = simplex_shrink(corner, 0.46);
  CHECK(shrunk.c1 == doctest::Approx(-0.46));
  CHECK(shrunk.c3 == doctest::Approx(-0.46));
  const SimplexPoint p{0.2, -0.5, 0.1};
  const SimplexPoint same = simplex_shrink(p, 1.0);
  CHECK((same.c1 == p.c1 && same.c2 == p.c2 && same.c3 == p.c3));
  const SimplexPoint origin = simplex_shrink(p, 0.0);
  CHECK((origin.c1 == 0.0 && origin.c2 == 0.0 && origin.c3 == 0.0));

  CHECK(in_state_tetrahedron(corner));
  CHECK_FALSE(in_state_tetrahedron({1, 1, 1}));
  CHECK(min_bell_weight({1, 1, 1}) < 0);
  CHECK(in_state_tetrahedron({}));

  CHECK_FALSE(is_separable_point(shrunk));
  CHECK(is_separable_point(simplex_shrink(corner, 1.0 / 3)));
  CHECK(is_separable_point({}));
  CHECK_THROWS_AS(is_separable_point({1, 1, 1}), DomainError);

  CHECK(max_abs(simplex_matrix(corner) - singlet_state().matrix()) < 1e-15);
}

TEST_CASE("tetrahedron membership matches the Bell-basis eigenvalues") {
  for (int trial = 0; trial < 2000; ++trial) {
    const SimplexPoint p{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
    const double w = min_bell_weight(p);
    if (std::abs(w) > 1e-9) CHECK(in_state_tetrahedron(p) == (w >= 0));
  }
}

TEST_CASE("octahedron agrees with PPT inside the tetrahedron") {
  int tested = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const SimplexPoint p{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
    if (!in_state_tetrahedron(p)) continue;
    const double l1 = std::abs(p.c1) + std::abs(p.c2) + std::abs(p.c3);
    if (std::abs(l1 - 1) < 1e-9) continue;
    const DensityMatrix rho(simplex_matrix(p));
    CHECK(is_separable_point(p) == is_ppt(rho));
    ++tested;
  }
  CHECK(tested > 500);
  CHECK_FALSE(is_ppt(singlet_state()));
  CHECK(is_ppt(DensityMatrix::maximally_mixed(4)));
  CHECK_THROWS_AS(is_ppt(DensityMatrix::maximally_mixed(2)), DimensionError);
}

TEST_CASE("witness sign and octahedron membership flip together at k = 1/3") {
  for (int i = 0; i <= 300; ++i) {
    const double k = i / 300.0;
    const bool entangled = witness_value(PairModel::from_product(k)) < -1e-12;
    const bool separable = is_separable_point(simplex_shrink(SimplexPoint::singlet(), k));
    CHECK(entangled == !separable);
    CHECK(entangled == (k > 1.0 / 3));
  }
}
