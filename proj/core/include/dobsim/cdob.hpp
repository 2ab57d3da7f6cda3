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
#include <vector>

#include "dobsim/filter.hpp"
#include "dobsim/transfer_function.hpp"

namespace dobsim {

/// Communication-disturbance-observer loop: the loop delay is treated as a
/// fictitious input disturbance; its Q-filtered estimate, passed through the
/// nominal model, reconstructs an undelayed output for feedback.
struct CdobConfiguration {
  TransferFunction controller;
  TransferFunction nominal;  // Gn(z); also the default truth dynamics
  TransferFunction q;
  int delay_samples = 0;     // N
  std::optional<TransferFunction> truth;  // undelayed truth; defaults to nominal

  const TransferFunction& truth_plant() const { return truth ? *truth : nominal; }

  void validate_runtime() const;
};

/// Per-sample executor of the compensated controller. Consumes the delayed
/// measurement; the delay itself lives on the plant side.
class CdobLoop {
 public:
  explicit CdobLoop(const CdobConfiguration& cfg);

  void reset();

  double step(double r, double y_delayed);

  struct Signals {
    double dhat = 0.0;    // Q(u) - (Q/Gn)(y_delayed)
    double y_comp = 0.0;  // y_delayed + Gn(dhat)
    double u = 0.0;
  };
  const Signals& last() const { return last_; }

  /// Actuation k samples ago (0 = the most recent step), zero before start.
  /// History holds the last delay_samples + 1 actuations.
  double past_input(int k) const;

 private:
  FilterState c_;
  // When the model denominator carries a double root at z = 1, the estimate
  // filter runs behind an exact second difference of the measurement.
  bool difference_input_;
  FilterState q_gn_inv_, q_, gn_;
  double y_prev_ = 0.0, y_prev2_ = 0.0;
  std::vector<double> u_hist_;
  std::size_t hist_pos_ = 0;
  Signals last_;
};

struct CdobClosedLoop {
  TransferFunction t_ry;
  TransferFunction t_dy;
  Polynomial characteristic;  // shared denominator polynomial
};

/// Assembled loop with the delay as a z^{-N} numerator shift:
///   T_ry = C Gn z^{-N} / (1 + C Gn Q + C Gn z^{-N} (1 - Q))
///   T_dy = (1 + C Gn Q) / (1 + C Gn Q + C Gn z^{-N} (1 - Q))
CdobClosedLoop cdob_closed_loop(const CdobConfiguration& cfg);

/// Same assembly with Q replaced (for the Q -> 1 delay-elimination check).
CdobClosedLoop cdob_closed_loop_with_q(const CdobConfiguration& cfg,
                                       const TransferFunction& q);

/// Drives the loop with truth = Gn z^{-N} plus an output disturbance and
/// compares the trace against the closed-form response (compensated
/// arithmetic reference). Returns the maximum absolute deviation.
double cdob_sim_vs_tf_deviation(const CdobConfiguration& cfg,
                                std::span<const double> r,
                                std::span<const double> d);

/// Network-disturbance consistency: the observer estimate must equal the
/// Q-filtered (u_k - u_{k-N}) when the truth is exactly Gn z^{-N}. Runs the
/// closed loop on the given reference input; returns the maximum deviation
/// between the two estimate paths.
double nd_identity_deviation(const CdobConfiguration& cfg,
                             std::span<const double> r);

/// Stock compensator low pass (double pole at s = -50) and its ZOH image.
TransferFunction q_cdob_s();
TransferFunction q_cdob_z(double ts = 0.01);

}  // namespace dobsim
