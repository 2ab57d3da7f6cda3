// Copyright 2026 The dobsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "dobsim/cdob.hpp"
#include "dobsim/dob.hpp"
#include "dobsim/filter.hpp"
#include "dobsim/state_space.hpp"
#include "dobsim/vehicle.hpp"
#include "support/oracles.hpp"

using dobsim::StateSpaceModel;
using dobsim::TransferFunction;

namespace {

// Closed-form ZOH of the critically damped pair a^2/(s+a)^2:
// num {1 - e(1+aT), e^2 - e(1-aT)}, den (z - e)^2 with e = exp(-aT).
struct DoublePoleZoh {
  double b1, b0, a1, a0;
};
DoublePoleZoh zoh_double_pole(double a, double t) {
  const double e = std::exp(-a * t);
  return {1.0 - e * (1.0 + a * t), e * e - e * (1.0 - a * t), -2.0 * e, e * e};
}

}  // namespace

TEST_CASE("canonical realizations of simple systems") {
  const auto gain = StateSpaceModel::from_tf(TransferFunction::continuous({3.5}, {1.0}));
  CHECK(gain.order() == 0);
  CHECK(gain.D()(0, 0) == 3.5);

  const auto lag = StateSpaceModel::from_tf(
      TransferFunction::continuous({1.0}, {1.0, 1.0}));
  CHECK(lag.order() == 1);
  CHECK(lag.A()(0, 0) == -1.0);
  CHECK(lag.B()(0, 0) == 1.0);
  CHECK(lag.C()(0, 0) == 1.0);
  CHECK(lag.D()(0, 0) == 0.0);

  CHECK_THROWS_WITH_AS(
      (void)StateSpaceModel::from_tf(
          TransferFunction::continuous({1.0, 0.0, 0.0}, {1.0, 1.0})),
      "improper transfer function", std::invalid_argument);
}

TEST_CASE("observer inversion product is realizable at relative degree zero") {
  const auto product = series(dobsim::q_dob_s(), dobsim::nominal_plant_s().inverse());
  CHECK(product.num().degree() == 4);
  CHECK(product.den().degree() == 4);
  CHECK(product.relative_degree() == 0);
  const auto ss = StateSpaceModel::from_tf(product);
  CHECK(ss.order() == 4);
  CHECK(ss.D()(0, 0) != 0.0);
}

TEST_CASE("transfer function recovered from the realization") {
  std::mt19937 rng(5150u);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = trial % 2 == 0 ? oracles::random_stable_continuous(rng)
                                  : oracles::random_stable_discrete(rng, 0.01);
    const auto back = StateSpaceModel::from_tf(g).to_tf();
    for (int i = 0; i < 16; ++i) {
      const std::complex<double> p(re(rng), re(rng) + 2.5);
      const auto want = g.eval(p);
      const auto got = back.eval(p);
      CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("zoh of the observer filters matches the closed form") {
  const double ts = 0.01;
  SUBCASE("pole pair at -2") {
    const auto q = dobsim::q_dob_z(ts);
    const auto ref = zoh_double_pole(2.0, ts);
    const double lead = q.den().leading();
    CHECK(q.num().coeff_of_power(1) / lead == doctest::Approx(ref.b1).epsilon(1e-9));
    CHECK(q.num().coeff_of_power(0) / lead == doctest::Approx(ref.b0).epsilon(1e-9));
    CHECK(q.den().coeff_of_power(1) / lead == doctest::Approx(ref.a1).epsilon(1e-9));
    CHECK(q.den().coeff_of_power(0) / lead == doctest::Approx(ref.a0).epsilon(1e-9));
  }
  SUBCASE("pole pair at -50") {
    const auto q = dobsim::q_cdob_z(ts);
    const auto ref = zoh_double_pole(50.0, ts);
    const double lead = q.den().leading();
    CHECK(q.num().coeff_of_power(1) / lead == doctest::Approx(ref.b1).epsilon(1e-9));
    CHECK(q.num().coeff_of_power(0) / lead == doctest::Approx(ref.b0).epsilon(1e-9));
    CHECK(q.den().coeff_of_power(1) / lead == doctest::Approx(ref.a1).epsilon(1e-9));
    CHECK(q.den().coeff_of_power(0) / lead == doctest::Approx(ref.a0).epsilon(1e-9));
  }
}

TEST_CASE("zoh preserves the DC gain exactly") {
  CHECK(std::abs(dobsim::q_dob_z(0.01).dc_gain() - 1.0) < 1e-9);
  CHECK(std::abs(dobsim::q_cdob_z(0.01).dc_gain() - 1.0) < 1e-9);
  std::mt19937 rng(31u);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracles::random_stable_continuous(rng);
    const auto gz = dobsim::zoh_discretize(g, 0.02);
    CHECK(gz.dc_gain() == doctest::Approx(g.dc_gain()).epsilon(1e-10));
  }
}

TEST_CASE("zoh step response interpolates the continuous one exactly") {
  std::mt19937 rng(7001u);
  const double ts = 0.05;
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracles::random_stable_continuous(rng);
    const auto gz = dobsim::zoh_discretize(g, ts);
    dobsim::FilterState filter(gz);
    for (int k = 0; k < 200; ++k) {
      const double got = filter.step(1.0);
      // ZOH is exact for held inputs: compare at the sample instants. The
      // discrete output at step k equals the continuous response at t = k Ts.
      const double want = oracles::residue_step_response(g, k * ts);
      CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("discretized nominal plant pole map") {
  const auto gz = dobsim::nominal_plant_z(0.01);
  auto poles = gz.poles();
  REQUIRE(poles.size() == 4);
  std::sort(poles.begin(), poles.end(),
            [](auto a, auto b) { return a.real() < b.real(); });
  // e^{p Ts} of the continuous poles {0, 0, -11.539, -740.31}.
  const auto fast = oracles::quadratic_roots(1.242, 933.8, 10610.0);
  const double slow_map = std::exp(std::max(fast[0].real(), fast[1].real()) * 0.01);
  const double fast_map = std::exp(std::min(fast[0].real(), fast[1].real()) * 0.01);
  CHECK(poles[0].real() == doctest::Approx(fast_map).epsilon(1e-6));
  CHECK(poles[1].real() == doctest::Approx(slow_map).epsilon(1e-6));
  CHECK(poles[1].real() == doctest::Approx(0.8911).epsilon(1e-3));
  CHECK(poles[0].real() == doctest::Approx(0.00061).epsilon(2e-2));
  CHECK(std::abs(poles[2] - std::complex<double>(1.0, 0.0)) < 1e-6);
  CHECK(std::abs(poles[3] - std::complex<double>(1.0, 0.0)) < 1e-6);
}

TEST_CASE("discrete poles approach one as the sample time vanishes") {
  const auto gz = dobsim::nominal_plant_z(1e-5);
  for (const auto& p : gz.poles()) {
    CHECK(std::abs(p - std::complex<double>(1.0, 0.0)) < 0.01);
  }
}

TEST_CASE("zoh rejects misuse") {
  const auto d = TransferFunction::discrete({1.0}, {1.0, -0.5}, 0.01);
  CHECK_THROWS_AS((void)dobsim::zoh_discretize(d, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(
      (void)dobsim::zoh_discretize(
          TransferFunction::continuous({1.0, 0.0, 0.0}, {1.0, 1.0}), 0.01),
      std::invalid_argument);
}
