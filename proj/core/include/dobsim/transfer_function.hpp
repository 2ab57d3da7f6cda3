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

#include <complex>
#include <vector>

#include "dobsim/polynomial.hpp"

namespace dobsim {

enum class Domain { continuous, discrete };

enum class StabilityVerdict { stable, marginal, unstable };

enum class FeedbackSign { negative, positive };

/// Ratio of two real polynomials tagged continuous or discrete.
///
/// Discrete systems carry their sample time; algebra between mismatched
/// domains or sample times is rejected. Coefficients are kept exactly as
/// given (no normalization), so printed designs survive round trips.
class TransferFunction {
 public:
  static TransferFunction continuous(Polynomial num, Polynomial den);
  static TransferFunction discrete(Polynomial num, Polynomial den, double ts);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  Domain domain() const { return domain_; }
  bool is_discrete() const { return domain_ == Domain::discrete; }
  double sample_time() const { return ts_; }

  bool is_zero() const { return num_.is_zero(); }

  /// deg(den) - deg(num); the zero transfer function reports a large value.
  int relative_degree() const;
  bool is_proper() const { return relative_degree() >= 0; }
  bool is_strictly_proper() const { return relative_degree() >= 1; }

  /// Raw evaluation at a complex point (no pole guard).
  std::complex<double> eval(std::complex<double> point) const;

  /// Evaluates at s = j*omega (continuous) or z = e^{j*omega*Ts} (discrete).
  /// Throws std::domain_error above the Nyquist frequency and
  /// std::runtime_error when omega lands on a pole of the contour.
  std::complex<double> frequency_response(double omega) const;

  /// Gain at s=0 / z=1. May be infinite for integrating systems.
  double dc_gain() const;

  std::vector<std::complex<double>> poles() const { return den_.roots(); }
  std::vector<std::complex<double>> zeros() const;

  TransferFunction inverse() const;

  friend TransferFunction operator*(const TransferFunction& a,
                                    const TransferFunction& b);
  friend TransferFunction operator+(const TransferFunction& a,
                                    const TransferFunction& b);
  friend TransferFunction operator*(double k, const TransferFunction& g);

 private:
  TransferFunction(Polynomial num, Polynomial den, Domain d, double ts);

  Polynomial num_, den_;
  Domain domain_;
  double ts_;
};

/// Series product num_a*num_b / den_a*den_b. Pole/zero pairs that coincide
/// within the cancellation tolerance are removed; otherwise the product is
/// returned exactly as convolved.
TransferFunction series(const TransferFunction& a, const TransferFunction& b);

/// Parallel sum (num_a*den_b + num_b*den_a) / (den_a*den_b).
TransferFunction parallel(const TransferFunction& a, const TransferFunction& b);

/// Closes the loop around L: L/(1+L) for negative feedback, L/(1-L) for
/// positive.
TransferFunction feedback(const TransferFunction& loop,
                          FeedbackSign sign = FeedbackSign::negative);

/// Root-location stability check. Roots within the stability band of the
/// boundary make the verdict marginal; anything beyond makes it unstable.
StabilityVerdict stability(const TransferFunction& g);

/// True only for strictly stable systems (marginal is not stable).
bool is_stable(const TransferFunction& g);

/// True when the two rational functions are identical as fractions:
/// num_a*den_b - num_b*den_a vanishes relative to its coefficient scale.
bool rational_identity(const TransferFunction& a, const TransferFunction& b,
                       double rel_tol);

}  // namespace dobsim
