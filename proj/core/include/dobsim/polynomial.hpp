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
#include <initializer_list>
#include <span>
#include <vector>

namespace dobsim {

/// Real-coefficient polynomial, stored highest degree first.
///
/// The zero polynomial is represented as a single zero coefficient.
/// Construction trims leading coefficients that are negligible relative to
/// the largest coefficient magnitude.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  /// Expands prod(x - r_i) scaled by `leading`. Roots must be closed under
  /// conjugation; residual imaginary parts are checked and dropped.
  static Polynomial from_roots(std::span<const std::complex<double>> roots,
                               double leading = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  double leading() const { return coeffs_.front(); }
  std::span<const double> coeffs() const { return coeffs_; }

  /// Coefficient of x^k (0 for k above the degree).
  double coeff_of_power(int k) const;

  std::complex<double> eval(std::complex<double> x) const;
  double eval(double x) const;

  /// Roots via the companion-matrix eigenvalues. Throws on the zero
  /// polynomial ("undefined roots"); a nonzero constant has no roots.
  std::vector<std::complex<double>> roots() const;

  Polynomial operator-() const;
  Polynomial& operator*=(double k);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double k, const Polynomial& p);

  /// Multiplies by x^n (appends n zero coefficients).
  Polynomial shifted_up(int n) const;

  bool operator==(const Polynomial& other) const = default;

 private:
  std::vector<double> coeffs_;
  void trim();
};

}  // namespace dobsim
