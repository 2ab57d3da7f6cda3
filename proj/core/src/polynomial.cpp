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

#include "dobsim/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dobsim/tolerances.hpp"

namespace dobsim {

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : Polynomial(std::vector<double>(coeffs)) {}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    coeffs_ = {0.0};
    return;
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("polynomial coefficient is not finite");
    }
  }
  trim();
}

void Polynomial::trim() {
  double max_abs = 0.0;
  for (double c : coeffs_) max_abs = std::max(max_abs, std::abs(c));
  if (max_abs == 0.0) {
    coeffs_ = {0.0};
    return;
  }
  std::size_t first = 0;
  while (first + 1 < coeffs_.size() &&
         std::abs(coeffs_[first]) <= tol::coeff_trim_rel * max_abs) {
    ++first;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
}

Polynomial Polynomial::from_roots(std::span<const std::complex<double>> roots,
                                  double leading) {
  std::vector<std::complex<double>> c{leading};
  for (const auto& r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i >= 1; --i) {
      c[i] -= r * c[i - 1];
    }
  }
  std::vector<double> out(c.size());
  double max_abs = 0.0;
  for (const auto& v : c) max_abs = std::max(max_abs, std::abs(v));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::abs(c[i].imag()) > 1e-8 * std::max(1.0, max_abs)) {
      throw std::invalid_argument(
          "from_roots: roots are not closed under conjugation");
    }
    out[i] = c[i].real();
  }
  return Polynomial(std::move(out));
}

double Polynomial::coeff_of_power(int k) const {
  const int d = degree();
  if (k < 0 || k > d) return 0.0;
  return coeffs_[static_cast<std::size_t>(d - k)];
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (double c : coeffs_) acc = acc * x + c;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (double c : coeffs_) acc = acc * x + c;
  return acc;
}

std::vector<std::complex<double>> Polynomial::roots() const {
  if (is_zero()) {
    throw std::invalid_argument("undefined roots: zero polynomial");
  }
  const int n = degree();
  if (n == 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    companion(0, i) = -coeffs_[static_cast<std::size_t>(i + 1)] / coeffs_[0];
  }
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = ev(i);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

Polynomial Polynomial::operator-() const {
  std::vector<double> c(coeffs_);
  for (double& v : c) v = -v;
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator*=(double k) {
  for (double& v : coeffs_) v *= k;
  trim();
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const std::size_t na = a.coeffs_.size(), nb = b.coeffs_.size();
  const std::size_t n = std::max(na, nb);
  std::vector<double> c(n, 0.0);
  for (std::size_t i = 0; i < na; ++i) c[n - na + i] += a.coeffs_[i];
  for (std::size_t i = 0; i < nb; ++i) c[n - nb + i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(double k, const Polynomial& p) {
  Polynomial out = p;
  out *= k;
  return out;
}

Polynomial Polynomial::shifted_up(int n) const {
  if (n < 0) throw std::invalid_argument("shifted_up: negative shift");
  if (is_zero()) return {};
  std::vector<double> c = coeffs_;
  c.insert(c.end(), static_cast<std::size_t>(n), 0.0);
  return Polynomial(std::move(c));
}

}  // namespace dobsim
