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

/// Runtime form of a discrete transfer function: direct form II transposed.
///
/// Register count equals the denominator degree. Reset state produces zero
/// output for zero input. The registers accumulate with compensated
/// (hi + lo) arithmetic so that marginally stable filters, such as double
/// integrators, do not amplify per-step rounding over long runs.
/// Single-owner mutable; not meant to be shared.
class FilterState {
 public:
  /// Requires a proper discrete transfer function.
  explicit FilterState(const TransferFunction& g);

  void reset();

  /// Advances one sample and returns the output.
  double step(double u);

  /// Output the next step would produce independent of its input. Only
  /// meaningful for strictly proper filters (no direct feedthrough).
  double peek() const;

  bool has_feedthrough() const { return b_.front() != 0.0; }
  int order() const { return static_cast<int>(s_hi_.size()); }
  const TransferFunction& tf() const { return tf_; }

 private:
  TransferFunction tf_;
  std::vector<double> b_, a_;        // normalized, front-padded, a_[0] == 1
  std::vector<double> s_hi_, s_lo_;  // compensated registers
};

/// Pure transport delay of N samples; output is zero for the first N steps.
class DelayLine {
 public:
  explicit DelayLine(int n_samples);

  void reset();
  double step(double u);
  int delay() const { return static_cast<int>(buf_.size()); }

 private:
  std::vector<double> buf_;
  std::size_t idx_ = 0;
};

/// Delay line with a per-sample delay selection: step(u, n) records u and
/// returns the input from n samples ago (zero before start). n may change
/// every sample up to the configured capacity.
class VariableDelayLine {
 public:
  explicit VariableDelayLine(int max_delay);

  void reset();
  double step(double u, int n_samples);
  int max_delay() const { return static_cast<int>(buf_.size()) - 1; }

 private:
  std::vector<double> buf_;
  std::size_t head_ = 0;
};

}  // namespace dobsim
