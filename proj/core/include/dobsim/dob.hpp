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

#include "dobsim/filter.hpp"
#include "dobsim/transfer_function.hpp"

namespace dobsim {

/// Disturbance-observer compensated loop: PD controller plus a Q-filtered
/// nominal-model inversion that estimates and cancels the lumped effect of
/// model mismatch and external disturbance at the plant input.
struct DobConfiguration {
  TransferFunction controller;
  TransferFunction nominal;  // design model Gn(z)
  TransferFunction q;        // unity-DC low pass; identically zero disables the observer
  std::optional<TransferFunction> truth;  // plant used by analysis ops; defaults to nominal

  const TransferFunction& truth_plant() const { return truth ? *truth : nominal; }

  /// Runtime wiring requirements: one shared discrete sample time; Q strictly
  /// proper (otherwise the u-feedback forms an algebraic loop); Q(1) = 1
  /// within tolerance unless Q is identically zero; Q/Gn proper.
  void validate_runtime() const;
};

/// Per-sample executor. The Q(u) path consumes the previous actuation
/// sample, which is exact because Q has no direct feedthrough.
class DobLoop {
 public:
  explicit DobLoop(const DobConfiguration& cfg);

  void reset();

  /// u_k from the reference and measurement at sample k.
  double step(double r, double y);

  struct Signals {
    double u1 = 0.0;    // C(r - y)
    double u = 0.0;     // actuation
    double dhat = 0.0;  // estimate channel (Q/Gn)y - Qu
  };
  const Signals& last() const { return last_; }

 private:
  FilterState c_, q_gn_inv_, q_;
  Signals last_;
};

struct ClosedLoopTfs {
  TransferFunction t_ry;
  TransferFunction t_dy;
};

/// Command and output-disturbance transfer functions of the assembled loop
/// with an LTI truth plant:
///   T_ry = C Gn G dq-normalized / (Gn(1-Q) + G(C Gn + Q))
///   T_dy = Gn(1-Q) / (Gn(1-Q) + G(C Gn + Q))
/// Returned unsimplified apart from exact cancellations.
ClosedLoopTfs dob_closed_loop(const DobConfiguration& cfg);

/// Same assembly with Q replaced (used for the Q -> 1 and Q -> 0 limits).
ClosedLoopTfs dob_closed_loop_with_q(const DobConfiguration& cfg,
                                     const TransferFunction& q);

/// Runs the per-sample loop against the truth plant and compares with the
/// closed-form transfer-function response to the same (r, d) inputs.
/// Returns the maximum absolute deviation. The reference response is
/// evaluated in compensated arithmetic.
double dob_sim_vs_tf_deviation(const DobConfiguration& cfg,
                               std::span<const double> r,
                               std::span<const double> d);

/// Stock observer low pass (double pole at s = -2) and its ZOH image.
TransferFunction q_dob_s();
TransferFunction q_dob_z(double ts = 0.01);

}  // namespace dobsim
