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
#include <cstdint>
#include <cstring>
#include <numbers>
#include <random>

#include "dobsim/filter.hpp"
#include "dobsim/pd_design.hpp"
#include "dobsim/vehicle.hpp"

using dobsim::DerivativeForm;
using dobsim::PDGains;
using dobsim::TransferFunction;
using dobsim::WeightSpec;

namespace {
const double kTs = 0.01;
const PDGains kDesign{0.07, 0.2};
}  // namespace

TEST_CASE("pd controller construction") {
  SUBCASE("pure proportional") {
    const auto c = dobsim::pd_controller({0.0, 0.3}, kTs);
    CHECK(c.eval(0.7).real() == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(c.eval(1.0).real() == doctest::Approx(0.3).epsilon(1e-15));
  }
  SUBCASE("design point expands to (7.2 z - 7)/z") {
    const auto c = dobsim::pd_controller(kDesign, kTs);
    const auto expanded = TransferFunction::discrete({7.2, -7.0}, {1.0, 0.0}, kTs);
    CHECK(dobsim::rational_identity(c, expanded, 1e-14));
    CHECK(c.dc_gain() == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(c.relative_degree() == 0);
    CHECK(c.poles().size() == 1);
    CHECK(std::abs(c.poles()[0]) < 1e-12);
  }
  SUBCASE("impulse response leads with kp + kd/Ts") {
    dobsim::FilterState f(dobsim::pd_controller(kDesign, kTs));
    CHECK(f.step(1.0) == doctest::Approx(0.2 + 0.07 / kTs).epsilon(1e-14));
    CHECK(f.step(0.0) == doctest::Approx(-0.07 / kTs).epsilon(1e-14));
    CHECK(f.step(0.0) == doctest::Approx(0.0));
  }
  SUBCASE("alternate derivative forms") {
    CHECK_FALSE(dobsim::pd_controller(kDesign, kTs, DerivativeForm::forward).is_proper());
    const auto trap = dobsim::pd_controller(kDesign, kTs, DerivativeForm::trapezoidal);
    CHECK(trap.is_proper());
    CHECK(std::abs(trap.poles()[0] + 1.0) < 1e-12);
    CHECK(trap.dc_gain() == doctest::Approx(0.2).epsilon(1e-12));
  }
}

TEST_CASE("weight asymptotes hit the published bounds") {
  const WeightSpec w{};
  const auto ws = dobsim::sensitivity_weight(w);
  const auto wt = dobsim::comp_sensitivity_weight(w);
  CHECK(std::abs(ws.frequency_response(0.0)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(ws.frequency_response(1e9)) == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(std::abs(wt.frequency_response(0.0)) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::abs(wt.frequency_response(1e9)) == doctest::Approx(1.8).epsilon(1e-6));
  WeightSpec bad;
  bad.ls = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("phase margin on hand-checkable loops") {
  SUBCASE("0.5/(z-0.5) crosses unity at DC with 180 degrees to spare") {
    const auto loop = TransferFunction::discrete({0.5}, {1.0, -0.5}, kTs);
    CHECK(dobsim::phase_margin_deg(loop) == doctest::Approx(180.0).epsilon(1e-6));
  }
  SUBCASE("all-pass delay has no isolated crossover") {
    const auto loop = TransferFunction::discrete({1.0}, {1.0, 0.0}, kTs);
    CHECK_THROWS_AS((void)dobsim::phase_margin_deg(loop), std::runtime_error);
  }
  SUBCASE("tiny loop never reaches unity gain") {
    const auto loop = TransferFunction::discrete({1e-3}, {1.0, -0.5}, kTs);
    CHECK_THROWS_WITH_AS((void)dobsim::phase_margin_deg(loop), "no gain crossover",
                         std::runtime_error);
  }
}

TEST_CASE("design point margins are reproducible") {
  const auto gn = dobsim::nominal_plant_z(kTs);
  const auto c = dobsim::pd_controller(kDesign, kTs);
  const double pm = dobsim::phase_margin_deg(series(c, gn));
  // Documented property of the parallel-form backward-difference PD: the
  // margin lands above the [20, 80] design window.
  CHECK(pm == doctest::Approx(100.8).epsilon(5e-3));
  const double ms = dobsim::mixed_sensitivity_sup(kDesign, gn, WeightSpec{});
  CHECK(ms == doctest::Approx(0.922).epsilon(5e-3));
  CHECK(ms < 1.0);
}

TEST_CASE("phase margin moves monotonically with loop gain near one crossover") {
  // The derivative lead makes the phase rise through the crossover band of
  // this loop, so the margin grows with gain; the check is that the motion
  // stays monotone around the single crossover.
  const auto gn = dobsim::nominal_plant_z(kTs);
  const auto c = dobsim::pd_controller(kDesign, kTs);
  const auto loop = series(c, gn);
  double previous = -1e9;
  for (double k : {0.8, 1.0, 1.25}) {
    const double pm = dobsim::phase_margin_deg(k * loop);
    CHECK(pm > previous);
    previous = pm;
  }
}

TEST_CASE("open loop violates the mixed sensitivity bound") {
  // With no control S = 1 and the supremum rides the sensitivity weight,
  // whose peak is 2 at DC; the grid starts at 0.01 rad/s just below it.
  const auto gn = dobsim::nominal_plant_z(kTs);
  const double sup = dobsim::mixed_sensitivity_sup({0.0, 0.0}, gn, WeightSpec{});
  CHECK(sup > 1.99);
  CHECK(sup > 1.0);  // the design constraint is violated
}

TEST_CASE("mixed sensitivity rejects divergent loops") {
  const auto gn = dobsim::nominal_plant_z(kTs);
  // Positive feedback through a sign-flipped controller destabilizes the
  // loop outright.
  CHECK_THROWS_WITH_AS(
      (void)dobsim::mixed_sensitivity_sup({-0.07, -0.2}, gn, WeightSpec{}),
      "unstable nominal loop", std::runtime_error);
}

TEST_CASE("mixed sensitivity is continuous in the gains") {
  const auto gn = dobsim::nominal_plant_z(kTs);
  const double base = dobsim::mixed_sensitivity_sup(kDesign, gn, WeightSpec{});
  const double bumped = dobsim::mixed_sensitivity_sup(
      {kDesign.kd + 1e-9, kDesign.kp + 1e-9}, gn, WeightSpec{});
  CHECK(std::abs(bumped - base) < 1e-6);
}

TEST_CASE("sensitivity identities hold pointwise") {
  const auto gn = dobsim::nominal_plant_z(kTs);
  const auto c = dobsim::pd_controller(kDesign, kTs);
  const auto loop = series(c, gn);
  const auto ws = dobsim::sensitivity_weight(WeightSpec{});
  const auto wt = dobsim::comp_sensitivity_weight(WeightSpec{});
  std::mt19937 rng(4242u);
  std::uniform_real_distribution<double> freq(1e-2, std::numbers::pi / kTs * 0.99);
  double sup_s = 0.0, sup_t = 0.0, sup_sum = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double w = freq(rng);
    const auto l = loop.frequency_response(w);
    const auto s = 1.0 / (1.0 + l);
    const auto t = l / (1.0 + l);
    CHECK(std::abs(s + t - 1.0) <= 1e-10);
    const std::complex<double> jw(0.0, w);
    sup_s = std::max(sup_s, std::abs(ws.eval(jw) * s));
    sup_t = std::max(sup_t, std::abs(wt.eval(jw) * t));
    sup_sum = std::max(sup_sum, std::abs(ws.eval(jw) * s) + std::abs(wt.eval(jw) * t));
  }
  CHECK(sup_sum >= std::max(sup_s, sup_t));
}

TEST_CASE("feasible region scan") {
  const auto gn = dobsim::nominal_plant_z(kTs);
  dobsim::RegionRequest req;
  req.n_kd = 13;
  req.n_kp = 13;
  const auto mask = dobsim::feasible_region(req, gn);
  REQUIRE(mask.size() == 13u * 13u);

  int feasible = 0;
  for (const auto& pt : mask) feasible += pt.feasible ? 1 : 0;
  CHECK(feasible > 0);

  // No control at all is infeasible.
  CHECK(mask.front().kd == 0.0);
  CHECK(mask.front().kp == 0.0);
  CHECK_FALSE(mask.front().feasible);

  SUBCASE("deterministic bit-for-bit") {
    const auto again = dobsim::feasible_region(req, gn);
    REQUIRE(again.size() == mask.size());
    auto bits = [](double v) {
      std::uint64_t u;
      std::memcpy(&u, &v, sizeof(u));
      return u;
    };
    for (std::size_t i = 0; i < mask.size(); ++i) {
      CHECK(again[i].kd == mask[i].kd);
      CHECK(again[i].kp == mask[i].kp);
      CHECK(again[i].stable == mask[i].stable);
      CHECK(again[i].feasible == mask[i].feasible);
      CHECK(bits(again[i].pm_deg) == bits(mask[i].pm_deg));
      CHECK(bits(again[i].mixed_sens) == bits(mask[i].mixed_sens));
    }
  }

  SUBCASE("pointwise re-evaluation agrees with the grid") {
    std::mt19937 rng(17u);
    std::uniform_int_distribution<std::size_t> pick(0, mask.size() - 1);
    int checked = 0;
    while (checked < 10) {
      const auto& pt = mask[pick(rng)];
      const auto direct = dobsim::evaluate_design_point(
          {pt.kd, pt.kp}, gn, req.pm, req.weights, req.form);
      CHECK(direct.feasible == pt.feasible);
      CHECK(direct.stable == pt.stable);
      ++checked;
    }
  }
}
