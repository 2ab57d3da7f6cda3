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

#include "dobsim/filter.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail/dd.hpp"

namespace dobsim {

FilterState::FilterState(const TransferFunction& g) : tf_(g) {
  if (!g.is_discrete()) {
    throw std::invalid_argument("filter requires a discrete transfer function");
  }
  if (!g.is_proper()) {
    throw std::invalid_argument("improper transfer function");
  }
  const int n = g.den().degree();
  const double a0 = g.den().leading();
  a_.assign(static_cast<std::size_t>(n) + 1, 0.0);
  b_.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    a_[static_cast<std::size_t>(i)] = g.den().coeff_of_power(n - i) / a0;
  }
  if (!g.num().is_zero()) {
    const int m = g.num().degree();
    for (int i = 0; i <= m; ++i) {
      b_[static_cast<std::size_t>(n - m + i)] = g.num().coeff_of_power(m - i) / a0;
    }
  }
  s_hi_.assign(static_cast<std::size_t>(n), 0.0);
  s_lo_.assign(static_cast<std::size_t>(n), 0.0);
}

void FilterState::reset() {
  std::fill(s_hi_.begin(), s_hi_.end(), 0.0);
  std::fill(s_lo_.begin(), s_lo_.end(), 0.0);
}

double FilterState::step(double u) {
  using detail::add;
  using detail::dd;
  using detail::mul;
  using detail::sub;
  const std::size_t n = s_hi_.size();
  if (n == 0) return b_[0] * u;
  const dd y = add(mul(dd(b_[0]), dd(u)), dd(s_hi_[0], s_lo_[0]));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const dd v = add(sub(mul(dd(b_[i + 1]), dd(u)), mul(dd(a_[i + 1]), y)),
                     dd(s_hi_[i + 1], s_lo_[i + 1]));
    s_hi_[i] = v.hi;
    s_lo_[i] = v.lo;
  }
  const dd last = sub(mul(dd(b_[n]), dd(u)), mul(dd(a_[n]), y));
  s_hi_[n - 1] = last.hi;
  s_lo_[n - 1] = last.lo;
  return y.hi + y.lo;
}

double FilterState::peek() const {
  return s_hi_.empty() ? 0.0 : s_hi_[0] + s_lo_[0];
}

DelayLine::DelayLine(int n_samples) {
  if (n_samples < 0) throw std::invalid_argument("negative delay");
  buf_.assign(static_cast<std::size_t>(n_samples), 0.0);
}

void DelayLine::reset() {
  std::fill(buf_.begin(), buf_.end(), 0.0);
  idx_ = 0;
}

double DelayLine::step(double u) {
  if (buf_.empty()) return u;
  const double out = buf_[idx_];
  buf_[idx_] = u;
  idx_ = (idx_ + 1) % buf_.size();
  return out;
}

VariableDelayLine::VariableDelayLine(int max_delay) {
  if (max_delay < 0) throw std::invalid_argument("negative delay");
  buf_.assign(static_cast<std::size_t>(max_delay) + 1, 0.0);
}

void VariableDelayLine::reset() {
  std::fill(buf_.begin(), buf_.end(), 0.0);
  head_ = 0;
}

double VariableDelayLine::step(double u, int n_samples) {
  if (n_samples < 0 || n_samples >= static_cast<int>(buf_.size())) {
    throw std::invalid_argument("delay outside the line's capacity");
  }
  head_ = (head_ + buf_.size() - 1) % buf_.size();
  buf_[head_] = u;
  return buf_[(head_ + static_cast<std::size_t>(n_samples)) % buf_.size()];
}

}  // namespace dobsim
