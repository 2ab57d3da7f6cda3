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

#include "dobsim/path.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dobsim {

namespace {

double arc_speed(double a, double b, double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return std::sqrt(a * a * s * s + b * b * c * c);
}

}  // namespace

EllipsePath::EllipsePath(double semi_major, double semi_minor)
    : a_(semi_major), b_(semi_minor) {
  if (!(b_ > 0.0) || a_ < b_) {
    throw std::invalid_argument("ellipse requires semi_major >= semi_minor > 0");
  }
  // ds/dtheta <= a, so this theta step keeps arc steps at or below 0.1 m.
  const double dtheta = 0.1 / a_;
  const std::size_t n = static_cast<std::size_t>(
      std::ceil(2.0 * std::numbers::pi / dtheta));
  theta_.resize(n + 1);
  arc_.resize(n + 1);
  theta_[0] = 0.0;
  arc_[0] = 0.0;
  double prev = arc_speed(a_, b_, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
    const double cur = arc_speed(a_, b_, th);
    theta_[i] = th;
    arc_[i] = arc_[i - 1] + 0.5 * (prev + cur) * (th - theta_[i - 1]);
    prev = cur;
  }
  perimeter_ = arc_.back();
}

double EllipsePath::curvature_at_arc(double s) const {
  if (s < 0.0) throw std::invalid_argument("arc position must be non-negative");
  double wrapped = std::fmod(s, perimeter_);
  const auto it = std::upper_bound(arc_.begin(), arc_.end(), wrapped);
  double theta;
  if (it == arc_.begin()) {
    theta = theta_.front();
  } else if (it == arc_.end()) {
    theta = theta_.back();
  } else {
    const std::size_t hi = static_cast<std::size_t>(it - arc_.begin());
    const std::size_t lo = hi - 1;
    const double span = arc_[hi] - arc_[lo];
    const double w = span > 0.0 ? (wrapped - arc_[lo]) / span : 0.0;
    theta = theta_[lo] + w * (theta_[hi] - theta_[lo]);
  }
  const double st = std::sin(theta), ct = std::cos(theta);
  const double g = a_ * a_ * st * st + b_ * b_ * ct * ct;
  return a_ * b_ / (g * std::sqrt(g));
}

void WindProfile::validate() const {
  if (magnitude < 0.0) throw std::invalid_argument("wind magnitude must be >= 0");
  if (!(on_time >= 0.0) || !(off_time > on_time)) {
    throw std::invalid_argument("wind profile requires off_time > on_time >= 0");
  }
}

}  // namespace dobsim
