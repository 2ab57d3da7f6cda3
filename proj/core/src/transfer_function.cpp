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

#include "dobsim/transfer_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dobsim/tolerances.hpp"

namespace dobsim {

namespace {

void require_compatible(const TransferFunction& a, const TransferFunction& b) {
  if (a.domain() != b.domain()) {
    throw std::invalid_argument("domain mismatch between transfer functions");
  }
  if (a.is_discrete() &&
      std::abs(a.sample_time() - b.sample_time()) >
          1e-12 * std::max(a.sample_time(), b.sample_time())) {
    throw std::invalid_argument("sample time mismatch between transfer functions");
  }
}

// Magnitude scale of p evaluated at |x|, used to detect evaluation on a pole.
double eval_scale(const Polynomial& p, double mag) {
  double acc = 0.0;
  for (double c : p.coeffs()) acc = acc * mag + std::abs(c);
  return acc;
}

}  // namespace

TransferFunction::TransferFunction(Polynomial num, Polynomial den, Domain d,
                                   double ts)
    : num_(std::move(num)), den_(std::move(den)), domain_(d), ts_(ts) {
  if (den_.is_zero()) {
    throw std::invalid_argument("transfer function denominator is zero");
  }
}

TransferFunction TransferFunction::continuous(Polynomial num, Polynomial den) {
  return TransferFunction(std::move(num), std::move(den), Domain::continuous, 0.0);
}

TransferFunction TransferFunction::discrete(Polynomial num, Polynomial den,
                                            double ts) {
  if (!(ts > 0.0)) throw std::invalid_argument("sample time must be positive");
  return TransferFunction(std::move(num), std::move(den), Domain::discrete, ts);
}

int TransferFunction::relative_degree() const {
  if (num_.is_zero()) return std::numeric_limits<int>::max();
  return den_.degree() - num_.degree();
}

std::complex<double> TransferFunction::eval(std::complex<double> point) const {
  return num_.eval(point) / den_.eval(point);
}

std::complex<double> TransferFunction::frequency_response(double omega) const {
  std::complex<double> point;
  if (is_discrete()) {
    const double nyquist = std::numbers::pi / ts_;
    if (omega < 0.0 || omega > nyquist * (1.0 + 1e-12)) {
      throw std::domain_error("above Nyquist frequency");
    }
    point = std::exp(std::complex<double>(0.0, omega * ts_));
  } else {
    point = std::complex<double>(0.0, omega);
  }
  // Only evaluations that land on a pole within rounding are rejected;
  // deliberately sampling close to one stays legal.
  const std::complex<double> d = den_.eval(point);
  if (d == std::complex<double>(0.0, 0.0) ||
      std::abs(d) < 1e-12 * eval_scale(den_, std::abs(point))) {
    throw std::runtime_error("frequency response undefined: pole on contour");
  }
  return num_.eval(point) / d;
}

double TransferFunction::dc_gain() const {
  const double x = is_discrete() ? 1.0 : 0.0;
  return num_.eval(x) / den_.eval(x);
}

std::vector<std::complex<double>> TransferFunction::zeros() const {
  if (num_.is_zero()) return {};
  return num_.roots();
}

TransferFunction TransferFunction::inverse() const {
  if (num_.is_zero()) {
    throw std::invalid_argument("cannot invert the zero transfer function");
  }
  return TransferFunction(den_, num_, domain_, ts_);
}

TransferFunction operator*(const TransferFunction& a, const TransferFunction& b) {
  return series(a, b);
}

TransferFunction operator+(const TransferFunction& a, const TransferFunction& b) {
  return parallel(a, b);
}

TransferFunction operator*(double k, const TransferFunction& g) {
  return TransferFunction(k * g.num_, g.den_, g.domain_, g.ts_);
}

TransferFunction series(const TransferFunction& a, const TransferFunction& b) {
  require_compatible(a, b);
  Polynomial num = a.num() * b.num();
  Polynomial den = a.den() * b.den();

  if (!num.is_zero() && num.degree() > 0 && den.degree() > 0) {
    auto zs = num.roots();
    auto ps = den.roots();
    std::vector<bool> z_used(zs.size(), false), p_used(ps.size(), false);
    std::size_t cancelled = 0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (!p_used[j] && std::abs(zs[i] - ps[j]) <=
                              tol::cancellation * std::max(1.0, std::abs(ps[j]))) {
          z_used[i] = true;
          p_used[j] = true;
          ++cancelled;
          break;
        }
      }
    }
    if (cancelled > 0) {
      std::vector<std::complex<double>> zr, pr;
      for (std::size_t i = 0; i < zs.size(); ++i)
        if (!z_used[i]) zr.push_back(zs[i]);
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (!p_used[j]) pr.push_back(ps[j]);
      num = Polynomial::from_roots(zr, num.leading());
      den = Polynomial::from_roots(pr, den.leading());
    }
  }
  return a.is_discrete()
             ? TransferFunction::discrete(std::move(num), std::move(den),
                                          a.sample_time())
             : TransferFunction::continuous(std::move(num), std::move(den));
}

TransferFunction parallel(const TransferFunction& a, const TransferFunction& b) {
  require_compatible(a, b);
  Polynomial num = a.num() * b.den() + b.num() * a.den();
  Polynomial den = a.den() * b.den();
  return a.is_discrete()
             ? TransferFunction::discrete(std::move(num), std::move(den),
                                          a.sample_time())
             : TransferFunction::continuous(std::move(num), std::move(den));
}

TransferFunction feedback(const TransferFunction& loop, FeedbackSign sign) {
  Polynomial den = sign == FeedbackSign::negative ? loop.den() + loop.num()
                                                  : loop.den() - loop.num();
  if (den.is_zero()) {
    throw std::invalid_argument("feedback: closed-loop denominator is zero");
  }
  return loop.is_discrete()
             ? TransferFunction::discrete(loop.num(), std::move(den),
                                          loop.sample_time())
             : TransferFunction::continuous(loop.num(), std::move(den));
}

StabilityVerdict stability(const TransferFunction& g) {
  if (!g.is_proper()) {
    throw std::invalid_argument("stability check requires a proper system");
  }
  const auto ps = g.poles();
  bool marginal = false;
  for (const auto& p : ps) {
    const double measure = g.is_discrete() ? std::abs(p) - 1.0 : p.real();
    if (measure > tol::stability_band) return StabilityVerdict::unstable;
    if (measure >= -tol::stability_band) marginal = true;
  }
  return marginal ? StabilityVerdict::marginal : StabilityVerdict::stable;
}

bool is_stable(const TransferFunction& g) {
  return stability(g) == StabilityVerdict::stable;
}

bool rational_identity(const TransferFunction& a, const TransferFunction& b,
                       double rel_tol) {
  require_compatible(a, b);
  const Polynomial residual = a.num() * b.den() - b.num() * a.den();
  if (residual.is_zero()) return true;
  double scale = 0.0;
  const Polynomial cross1 = a.num() * b.den();
  const Polynomial cross2 = b.num() * a.den();
  for (double c : cross1.coeffs()) scale = std::max(scale, std::abs(c));
  for (double c : cross2.coeffs()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return true;
  double worst = 0.0;
  for (double c : residual.coeffs()) worst = std::max(worst, std::abs(c));
  return worst <= rel_tol * scale;
}

}  // namespace dobsim
