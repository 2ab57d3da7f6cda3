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

#include <benchmark/benchmark.h>

#include "dobsim/pd_design.hpp"
#include "dobsim/vehicle.hpp"

namespace {

void BM_PhaseMargin(benchmark::State& state) {
  const auto loop = series(dobsim::pd_controller({0.07, 0.2}, 0.01),
                           dobsim::nominal_plant_z(0.01));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dobsim::phase_margin_deg(loop));
  }
}
BENCHMARK(BM_PhaseMargin);

void BM_DesignPoint(benchmark::State& state) {
  const auto gn = dobsim::nominal_plant_z(0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dobsim::evaluate_design_point(
        {0.07, 0.2}, gn, dobsim::PhaseMarginSpec{}, dobsim::WeightSpec{}));
  }
}
BENCHMARK(BM_DesignPoint);

void BM_RegionRow(benchmark::State& state) {
  const auto gn = dobsim::nominal_plant_z(0.01);
  dobsim::RegionRequest req;
  req.n_kd = 2;
  req.n_kp = 11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dobsim::feasible_region(req, gn));
  }
}
BENCHMARK(BM_RegionRow)->Unit(benchmark::kMillisecond);

}  // namespace
