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
#include <vector>

#include "dobsim/dob.hpp"
#include "dobsim/filter.hpp"
#include "dobsim/vehicle.hpp"
#include "support/oracles.hpp"

using dobsim::DelayLine;
using dobsim::FilterState;
using dobsim::TransferFunction;
using dobsim::VariableDelayLine;

TEST_CASE("unity filter passes the input through") {
  FilterState f(TransferFunction::discrete({1.0}, {1.0}, 0.01));
  for (double u : {1.0, -2.0, 0.25}) CHECK(f.step(u) == u);
}

TEST_CASE("single-pole-at-origin filter delays one sample") {
  FilterState f(TransferFunction::discrete({1.0}, {1.0, 0.0}, 0.01));
  CHECK(f.step(3.0) == 0.0);
  CHECK(f.step(-1.0) == 3.0);
  CHECK(f.step(0.0) == -1.0);
}

TEST_CASE("impulse response equals the long-division series") {
  auto check_impulse = [](const TransferFunction& g) {
    std::vector<double> num(g.num().coeffs().begin(), g.num().coeffs().end());
    std::vector<double> den(g.den().coeffs().begin(), g.den().coeffs().end());
    const auto series = oracles::long_division_series(num, den, 50);
    FilterState f(g);
    for (std::size_t k = 0; k < series.size(); ++k) {
      const double got = f.step(k == 0 ? 1.0 : 0.0);
      CHECK(std::abs(got - series[k]) <= 1e-10);
    }
  };
  check_impulse(dobsim::q_dob_z(0.01));
  check_impulse(dobsim::nominal_plant_z(0.01));
  std::mt19937 rng(10100u);
  for (int i = 0; i < 10; ++i) {
    check_impulse(oracles::random_stable_discrete(rng, 0.01));
  }
}

TEST_CASE("observer low pass settles to unity") {
  FilterState f(dobsim::q_dob_z(0.01));
  double y = 0.0;
  for (int k = 0; k < 500; ++k) y = f.step(1.0);
  CHECK(std::abs(y - 1.0) < 1e-3);
}

TEST_CASE("response matches the residue expansion") {
  std::mt19937 rng(2024u);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    const auto g = oracles::random_stable_discrete(rng, 0.01);
    const std::size_t n = 1000;  // 10 s at 0.01 s
    const auto h = oracles::residue_impulse_response(g, n);
    std::vector<double> u(n);
    for (double& v : u) v = amp(rng);
    // Convolution of the analytic impulse response with the input.
    std::vector<double> want(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      double acc = 0.0;
      for (std::size_t j = 0; j <= k; ++j) acc += h[j] * u[k - j];
      want[k] = acc;
    }
    FilterState f(g);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(f.step(u[k]) - want[k]) <= 1e-8);
    }
  }
}

TEST_CASE("reset restores quiescence") {
  FilterState f(dobsim::q_dob_z(0.01));
  for (int k = 0; k < 20; ++k) f.step(1.0);
  f.reset();
  for (int k = 0; k < 20; ++k) CHECK(f.step(0.0) == 0.0);
}

TEST_CASE("filters reject unusable transfer functions") {
  CHECK_THROWS_AS(FilterState(TransferFunction::continuous({1.0}, {1.0, 1.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      FilterState(TransferFunction::discrete({1.0, 0.0, 0.0}, {1.0, 1.0}, 0.01)),
      std::invalid_argument);
}

TEST_CASE("peek sees the strictly proper output ahead of the input") {
  FilterState f(dobsim::nominal_plant_z(0.01));
  std::mt19937 rng(33u);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const double ahead = f.peek();
    CHECK(f.step(amp(rng)) == ahead);
  }
}

TEST_CASE("delay line examples") {
  DelayLine identity(0);
  CHECK(identity.step(4.0) == 4.0);

  DelayLine line(3);
  const double in[] = {1.0, 0.0, 0.0, 0.0, 0.0};
  const double want[] = {0.0, 0.0, 0.0, 1.0, 0.0};
  for (int k = 0; k < 5; ++k) CHECK(line.step(in[k]) == want[k]);

  CHECK_THROWS_AS(DelayLine(-1), std::invalid_argument);

  // N = 100 equals the impulse response of z^{-100}.
  DelayLine big(100);
  for (int k = 0; k < 300; ++k) {
    const double got = big.step(k == 0 ? 1.0 : 0.0);
    CHECK(got == (k == 100 ? 1.0 : 0.0));
  }
}

TEST_CASE("variable delay line tracks the per-sample selection") {
  VariableDelayLine line(5);
  std::vector<double> inputs;
  std::mt19937 rng(8u);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int k = 0; k < 50; ++k) {
    const double u = amp(rng);
    inputs.push_back(u);
    const int n = pick(rng);
    const double got = line.step(u, n);
    const double want = (k - n) >= 0 ? inputs[static_cast<std::size_t>(k - n)] : 0.0;
    CHECK(got == want);
  }
  CHECK_THROWS_AS((void)line.step(0.0, 6), std::invalid_argument);
}
