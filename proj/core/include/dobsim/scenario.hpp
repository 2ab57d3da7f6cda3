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

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dobsim/path.hpp"
#include "dobsim/pd_design.hpp"
#include "dobsim/vehicle.hpp"

namespace dobsim {

enum class Compensation { none, dob, cdob };
enum class PathKind { ellipse, straight };
enum class Verdict { stable, oscillatory, diverged };

std::string_view to_string(Compensation c);
std::string_view to_string(Verdict v);

/// Complete description of one deterministic closed-loop run: path error
/// regulation (r = 0) of the truth vehicle around the route, with curvature
/// and crosswind acting as disturbances.
struct Scenario {
  VehicleParams vehicle{};
  std::optional<char> corner_label;  // overrides (V, m) when set
  PathKind path_kind = PathKind::ellipse;
  double semi_major = 500.0;  // [m]
  double semi_minor = 300.0;  // [m]
  WindProfile wind{};         // magnitude 0 disables the pulse
  PDGains gains{};
  DerivativeForm pd_form = DerivativeForm::backward;
  Compensation compensation = Compensation::none;
  int delay_samples = 0;  // measurement delay, applies to every mode
  double duration = 0.0;  // [s]; <= 0 selects one lap (ellipse) or 60 s
  double ts = 0.01;       // [s]
  double y0 = 1.0;        // initial lateral deviation [m]
  double settle_skip = 0.0;  // [s] excluded from the RMS metric

  VehicleParams effective_vehicle() const;
  double default_duration() const;
};

/// Divergence guard: the run truncates once |y| exceeds this.
inline constexpr double divergence_limit_m = 1e3;

struct SimulationTrace {
  Compensation compensation = Compensation::none;
  double ts = 0.01;
  double settle_skip = 0.0;

  std::vector<double> t, rho_ref, f_wind, y, y_s, u;
  std::vector<double> y_meas;               // measurement after the delay line
  std::vector<double> u1, dhat;             // observer internals (dob)
  std::vector<double> y_comp;               // reconstruction (cdob)

  double rms_y = 0.0;
  double max_abs_y = 0.0;
  Verdict verdict = Verdict::stable;
};

SimulationTrace run_scenario(const Scenario& sc);

/// Root of the mean squared lateral deviation over t >= settle_skip.
double trace_rms(const SimulationTrace& trace);

struct CornerSweepRow {
  char label;
  double speed_kmh;
  double mass_kg;
  double rms_pd;
  double rms_dob;
  double ratio;  // rms_dob / rms_pd
};

/// Runs the four uncertainty corners with plain PD and with PD+DOB.
std::vector<CornerSweepRow> corner_sweep(const Scenario& base);

struct DelaySweepRow {
  int delay_samples;
  double rms;
  Verdict verdict;
};

/// Runs the CDOB loop across the delay list on the base scenario.
std::vector<DelaySweepRow> delay_sweep(const Scenario& base,
                                       std::span<const int> delays);

inline constexpr int default_delay_sweep[] = {25, 50, 75, 100};

}  // namespace dobsim
