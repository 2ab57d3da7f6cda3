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

namespace dobsim {

/// Elliptical route sampled by arc length. Curvature lookup resolves the
/// parametric angle from arc length through a cached trapezoid quadrature
/// table with steps no longer than 0.1 m.
class EllipsePath {
 public:
  EllipsePath(double semi_major, double semi_minor);

  double semi_major() const { return a_; }
  double semi_minor() const { return b_; }
  double perimeter() const { return perimeter_; }

  /// Curvature at arc position s (wraps modulo the perimeter); lies in
  /// [b/a^2, a/b^2].
  double curvature_at_arc(double s) const;

 private:
  double a_, b_;
  std::vector<double> arc_, theta_;
  double perimeter_;
};

/// Rectangular crosswind pulse.
struct WindProfile {
  double magnitude = 500.0;  // [N]
  double on_time = 10.0;     // [s]
  double off_time = 20.0;    // [s]

  void validate() const;
  double force_at(double t) const {
    return (t >= on_time && t < off_time) ? magnitude : 0.0;
  }
};

}  // namespace dobsim
