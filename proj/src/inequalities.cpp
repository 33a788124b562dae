// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include "hyperon/inequalities.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <thread>

#include "hyperon/random.hpp"

namespace hyperon {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

BellSettings settings_from_angles(const Eigen::VectorXd& angles, int na, int nb) {
  BellSettings s;
  for (int i = 0; i < na + nb; ++i) {
    const Vec3 n = unit_vector(angles(2 * i), angles(2 * i + 1));
    (i < na ? s.a : s.b).push_back(n);
  }
  return s;
}

/// Hooke-Jeeves pattern search (maximization).
Eigen::VectorXd pattern_search(const std::function<double(const Eigen::VectorXd&)>& f,
                               Eigen::VectorXd base, double step, double min_step) {
  auto explore = [&f](Eigen::VectorXd x, double fx, double h, double& fout) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double keep = x(i);
      x(i) = keep + h;
      double trial = f(x);
      if (trial > fx) {
        fx = trial;
        continue;
      }
      x(i) = keep - h;
      trial = f(x);
      if (trial > fx) {
        fx = trial;
        continue;
      }
      x(i) = keep;
    }
    fout = fx;
    return x;
  };

  double f_base = f(base);
  while (step > min_step) {
    double f_new = 0.0;
    Eigen::VectorXd x = explore(base, f_base, step, f_new);
    if (f_new > f_base) {
      for (;;) {
        const Eigen::VectorXd pattern = x + (x - base);
        base = x;
        f_base = f_new;
        double f_pattern = f(pattern);
        double f_explored = 0.0;
        Eigen::VectorXd y = explore(pattern, f_pattern, step, f_explored);
        if (f_explored > f_base) {
          x = y;
          f_new = f_explored;
        } else {
          break;
        }
      }
    } else {
      step /= 2.0;
    }
  }
  return base;
}

}  // namespace

InequalitySpec InequalitySpec::i2() {
  InequalitySpec s;
  s.name = "I2";
  s.joint.resize(2, 2);
  s.joint << 1, 1,
             1, -1;
  s.single_a = vec({-1, 0});
  s.single_b = vec({-1, 0});
  return s;
}

InequalitySpec InequalitySpec::i3() {
  InequalitySpec s;
  s.name = "I3";
  s.joint.resize(3, 3);
  s.joint << 1, 1, 1,
             1, 1, -1,
             1, -1, 0;
  s.single_a = vec({-1, 0, 0});
  s.single_b = vec({-2, -1, 0});
  return s;
}

InequalitySpec InequalitySpec::i4() {
  InequalitySpec s;
  s.name = "I4";
  s.joint.resize(4, 4);
  s.joint << 1, 1, 1, 1,
             1, 1, 1, -1,
             1, 1, -1, 0,
             1, -1, 0, 0;
  s.single_a = vec({-1, 0, 0, 0});
  s.single_b = vec({-3, -2, -1, 0});
  return s;
}

InequalitySpec InequalitySpec::by_name(const std::string& name) {
  if (name == "I2") return i2();
  if (name == "I3") return i3();
  if (name == "I4") return i4();
  throw DomainError("unknown inequality '" + name + "' (expected I2, I3 or I4)");
}

void BellSettings::validate(const InequalitySpec& spec) const {
  if (static_cast<int>(a.size()) != spec.settings_a() ||
      static_cast<int>(b.size()) != spec.settings_b())
    throw DimensionError("setting counts do not match inequality " + spec.name);
  for (const auto& n : a) require_unit(n, "Bell setting");
  for (const auto& n : b) require_unit(n, "Bell setting");
}

void ProbModel::validate() const {
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("correlation scale k outside [0, 1]");
}

double prob_joint(const ProbModel& model, const Vec3& a, const Vec3& b) {
  return (1.0 - model.k * a.dot(b)) / 4.0;
}

double prob_single(const ProbModel&, const Vec3&) { return 0.5; }

double evaluate(const InequalitySpec& spec, const BellSettings& settings, const ProbModel& model) {
  settings.validate(spec);
  double total = 0.0;
  for (int i = 0; i < spec.settings_a(); ++i) {
    total += spec.single_a(i) * prob_single(model, settings.a[i]);
    for (int j = 0; j < spec.settings_b(); ++j)
      if (spec.joint(i, j) != 0.0)
        total += spec.joint(i, j) * prob_joint(model, settings.a[i], settings.b[j]);
  }
  for (int j = 0; j < spec.settings_b(); ++j)
    total += spec.single_b(j) * prob_single(model, settings.b[j]);
  return total;
}

BellMaximum maximize(const InequalitySpec& spec, const ProbModel& model,
                     const OptimizerOptions& options) {
  model.validate();
  if (options.starts < 1) throw DomainError("optimizer needs at least one start");
  const int na = spec.settings_a();
  const int nb = spec.settings_b();
  const int dims = 2 * (na + nb);

  auto objective = [&](const Eigen::VectorXd& angles) {
    return evaluate(spec, settings_from_angles(angles, na, nb), model);
  };

  std::vector<Eigen::VectorXd> best(static_cast<std::size_t>(options.starts));
  std::vector<double> values(static_cast<std::size_t>(options.starts));
  auto run_start = [&](int start) {
    CounterStream rng(options.seed, static_cast<std::uint64_t>(start));
    Eigen::VectorXd x(dims);
    for (int i = 0; i < na + nb; ++i) {
      x(2 * i) = std::acos(1.0 - 2.0 * rng.uniform());
      x(2 * i + 1) = 2.0 * kPi * rng.uniform();
    }
    best[start] = pattern_search(objective, x, 0.5, options.step_tolerance);
    values[start] = objective(best[start]);
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(options.starts)));
  if (workers == 1) {
    for (int s = 0; s < options.starts; ++s) run_start(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int s = static_cast<int>(w); s < options.starts; s += static_cast<int>(workers))
          run_start(s);
      });
    }
    for (auto& t : pool) t.join();
  }

  int winner = 0;
  for (int s = 1; s < options.starts; ++s)
    if (values[s] > values[winner]) winner = s;
  return {values[winner], settings_from_angles(best[winner], na, nb)};
}

double threshold(const InequalitySpec& spec, const OptimizerOptions& options, double tolerance) {
  auto max_at = [&](double k) { return maximize(spec, ProbModel{k}, options).value; };
  double lo = 0.0, hi = 1.0;
  if (!(max_at(lo) < 0.0 && max_at(hi) > 0.0))
    throw DomainError("maximum of " + spec.name + " does not change sign for k in [0, 1]");
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (max_at(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double contextuality_value(double alpha_1, double alpha_2) {
  const double sum_sq = alpha_1 * alpha_1 + alpha_2 * alpha_2;
  const double prod = alpha_1 * alpha_2;
  return sum_sq * sum_sq + 2.0 * prod * prod * prod;
}

double contextuality_equal_alpha_root() {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (contextuality_value(mid, mid) > kContextualityBound ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double mermin_peres_quantum_value(double scale_1, double scale_2) {
  const ComplexMatrix id = identity<double>(2);
  auto factor = [&](int axis, double scale) {
    return axis < 0 ? id : ComplexMatrix(scale * pauli<double>(axis));
  };
  // Each entry is (axis on particle 1, axis on particle 2), -1 for identity.
  constexpr int x = 0, y = 1, z = 2, none = -1;
  const int square[3][3][2] = {
      {{x, none}, {none, x}, {x, x}},
      {{none, y}, {y, none}, {y, y}},
      {{x, y}, {y, x}, {z, z}},
  };
  auto op = [&](int r, int c) {
    return tensor(factor(square[r][c][0], scale_1), factor(square[r][c][1], scale_2));
  };
  const DensityMatrix rho = singlet_state();
  auto expect = [&](const ComplexMatrix& m) { return (m * rho.matrix()).trace().real(); };

  double total = 0.0;
  for (int r = 0; r < 3; ++r) total += expect(op(r, 0) * op(r, 1) * op(r, 2));
  for (int c = 0; c < 3; ++c) {
    const double column = expect(op(0, c) * op(1, c) * op(2, c));
    total += c == 2 ? -column : column;
  }
  return total;
}

}  // namespace hyperon
