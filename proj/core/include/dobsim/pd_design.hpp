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

#include <vector>

#include "dobsim/transfer_function.hpp"

namespace dobsim {

/// Digital PD gains, stored as the ordered pair (kd, kp).
struct PDGains {
  double kd = 0.07;  // derivative gain [s]
  double kp = 0.2;   // proportional gain
};

/// Discrete derivative realization of the PD controller.
/// `backward` is the default: C(z) = kp + kd (z-1)/(Ts z), pole at z = 0.
/// `forward` (C(z) = kp + kd (z-1)/Ts) is improper and usable for frequency
/// analysis only; `trapezoidal` places the derivative pole at z = -1.
enum class DerivativeForm { backward, forward, trapezoidal };

TransferFunction pd_controller(const PDGains& g, double ts,
                               DerivativeForm form = DerivativeForm::backward);

struct PhaseMarginSpec {
  double min_deg = 20.0;
  double max_deg = 80.0;
};

/// First-order mixed-sensitivity weight data. The realized weights hit the
/// asymptotes exactly: |W_s| runs 1/ls -> 1/hs, |W_T| runs lT -> hT.
struct WeightSpec {
  double ls = 0.5;
  double hs = 4.0;
  double ws = 5.0;    // [rad/s]
  double lT = 0.2;
  double hT = 1.8;
  double wT = 120.0;  // [rad/s]

  void validate() const;
};

/// W_s(s) = (s + ws) / (hs s + ws ls)
TransferFunction sensitivity_weight(const WeightSpec& w);
/// W_T(s) = (hT s + wT lT) / (s + wT)
TransferFunction comp_sensitivity_weight(const WeightSpec& w);

/// Smallest 180 + arg L over all gain crossovers of a discrete loop.
/// Crossovers are located on a 400 points/decade log sweep of (0, pi/Ts)
/// and refined by bisection until |log|L|| < 1e-10.
/// Throws std::runtime_error when no crossover exists or when |L| sits on
/// unity over most of the grid (no isolated crossover).
double phase_margin_deg(const TransferFunction& loop);

/// sup over the log grid of |W_s(jw) S| + |W_T(jw) T| with S, T evaluated on
/// the discrete loop C*Gn and weights at continuous frequency.
/// Throws std::runtime_error("unstable nominal loop") when 1 + C*Gn has
/// roots on or outside the unit circle.
double mixed_sensitivity_sup(const PDGains& g, const TransferFunction& gn_z,
                             const WeightSpec& w,
                             DerivativeForm form = DerivativeForm::backward);

struct RegionPoint {
  double kd = 0.0;
  double kp = 0.0;
  bool stable = false;
  double pm_deg = 0.0;      // NaN when no crossover / not evaluated
  double mixed_sens = 0.0;  // NaN when the loop is unstable
  bool feasible = false;
};

struct RegionRequest {
  double kd_min = 0.0, kd_max = 0.3;
  double kp_min = 0.0, kp_max = 1.0;
  int n_kd = 121, n_kp = 121;
  PhaseMarginSpec pm;
  WeightSpec weights;
  DerivativeForm form = DerivativeForm::backward;
};

/// Scans the gain grid; a point is feasible when the closed loop is strictly
/// stable, the phase margin lies in the closed PM interval, and the mixed
/// sensitivity supremum is below one. Row-major over kd then kp;
/// deterministic for a fixed grid.
std::vector<RegionPoint> feasible_region(const RegionRequest& req,
                                         const TransferFunction& gn_z);

/// Single-point evaluation with the same rules the region scan applies.
RegionPoint evaluate_design_point(const PDGains& g, const TransferFunction& gn_z,
                                  const PhaseMarginSpec& pm, const WeightSpec& w,
                                  DerivativeForm form = DerivativeForm::backward);

}  // namespace dobsim
