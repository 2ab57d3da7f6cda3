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

#include "dobsim/filter.hpp"
#include "dobsim/state_space.hpp"
#include "dobsim/vehicle.hpp"

namespace {

void BM_ZohNominalPlant(benchmark::State& state) {
  const auto gn = dobsim::nominal_plant_s();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dobsim::zoh_discretize(gn, 0.01));
  }
}
BENCHMARK(BM_ZohNominalPlant);

void BM_PlantPoles(benchmark::State& state) {
  const auto gz = dobsim::nominal_plant_z(0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gz.poles());
  }
}
BENCHMARK(BM_PlantPoles);

void BM_FilterStep(benchmark::State& state) {
  dobsim::FilterState filter(dobsim::nominal_plant_z(0.01));
  double u = 1.0;
  for (auto _ : state) {
    u = 0.9 * u + filter.step(u);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_FilterStep);

}  // namespace

BENCHMARK_MAIN();
