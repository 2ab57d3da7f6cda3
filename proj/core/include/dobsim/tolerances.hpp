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

// Fixed numeric tolerances used across the toolbox. These are part of the
// library contract and are intentionally not configurable.
namespace dobsim::tol {

// Leading polynomial coefficients below this (relative to the largest
// coefficient magnitude) are trimmed.
inline constexpr double coeff_trim_rel = 1e-12;

// Root-finding acceptance: re-expanded roots must reproduce the input
// coefficients within this relative error.
inline constexpr double root_refit_rel = 1e-8;

// Pole/zero pairs closer than this cancel in series products.
inline constexpr double cancellation = 1e-9;

// Stability margin band around the unit circle / imaginary axis. Roots
// inside the band are reported as marginal rather than stable/unstable.
inline constexpr double stability_band = 1e-9;

// Unity-gain requirement on observer Q filters at DC.
inline constexpr double q_unity_dc = 1e-6;

// Gain-crossover bisection stops when |log|L|| drops below this.
inline constexpr double crossover_log_mag = 1e-10;

// Relative tolerances against the rounded reference coefficients of the
// stock design (plant and the two observer filters).
inline constexpr double ref_plant_coeff_rel = 0.01;
inline constexpr double ref_q_dob_coeff_rel = 0.02;
inline constexpr double ref_q_cdob_coeff_rel = 0.005;
inline constexpr double ref_q_dc_abs = 1e-9;

// Polynomial identity checks on assembled closed loops (cross-multiplied,
// relative to the largest coefficient).
inline constexpr double loop_identity_rel = 1e-10;

// Per-sample loop trace vs closed-form transfer-function response.
inline constexpr double sim_vs_tf_abs = 1e-9;

// Network-disturbance identity deviation bound.
inline constexpr double nd_identity_abs = 1e-8;

}  // namespace dobsim::tol
