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

#include "dobsim/cdob.hpp"
#include "dobsim/dob.hpp"
#include "dobsim/pd_design.hpp"
#include "dobsim/scenario.hpp"
#include "dobsim/vehicle.hpp"

namespace {

void BM_DobStep(benchmark::State& state) {
  dobsim::DobLoop loop({dobsim::pd_controller({0.07, 0.2}, 0.01),
                        dobsim::nominal_plant_z(0.01), dobsim::q_dob_z(0.01)});
  double y = 0.0;
  for (auto _ : state) {
    const double u = loop.step(1.0, y);
    y = 0.99 * y + 1e-3 * u;
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_DobStep);

void BM_CdobStep(benchmark::State& state) {
  dobsim::CdobLoop loop({dobsim::pd_controller({0.07, 0.2}, 0.01),
                         dobsim::nominal_plant_z(0.01), dobsim::q_cdob_z(0.01),
                         100});
  double y = 0.0;
  for (auto _ : state) {
    const double u = loop.step(1.0, y);
    y = 0.99 * y + 1e-3 * u;
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_CdobStep);

void BM_StraightScenario(benchmark::State& state) {
  dobsim::Scenario sc;
  sc.path_kind = dobsim::PathKind::straight;
  sc.compensation = dobsim::Compensation::dob;
  sc.duration = 10.0;
  sc.wind.magnitude = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dobsim::run_scenario(sc));
  }
}
BENCHMARK(BM_StraightScenario)->Unit(benchmark::kMillisecond);

}  // namespace
