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

#include <string>
#include <vector>

#include "dobsim/pd_design.hpp"

namespace dobsim {

/// The selected controller gains of the stock design.
inline constexpr PDGains design_point{0.07, 0.2};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  /// Scales the nominal plant numerator before discretization. Unity runs
  /// the stock design; anything else is a negative control that must fail
  /// the plant anchor.
  double gn_num_scale = 1.0;
};

/// Names of the built-in design checks, in execution order.
std::vector<std::string> reference_check_names();

/// Runs the built-in design anchors: ZOH coefficient matches against the
/// rounded reference values, Q DC gains, observer limit identities, the
/// delay-elimination property, and design-point stability/margins.
std::vector<CheckResult> run_reference_checks(const CheckOptions& options = {});

}  // namespace dobsim
