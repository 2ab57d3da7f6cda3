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

#include "dobsim/state_space.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dobsim {

namespace {

// Characteristic polynomial of A (monic, highest degree first) by the
// Faddeev-LeVerrier recursion. Exact arithmetic path, no eigensolve.
std::vector<double> char_poly(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = 1.0;
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    Eigen::MatrixXd AM = A * M;
    const double ck = -AM.trace() / k;
    c[static_cast<std::size_t>(k)] = ck;
    M = AM + ck * Eigen::MatrixXd::Identity(n, n);
  }
  return c;
}

}  // namespace

StateSpaceModel::StateSpaceModel(Eigen::MatrixXd A, Eigen::MatrixXd B,
                                 Eigen::MatrixXd C, Eigen::MatrixXd D,
                                 Domain domain, double ts)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), D_(std::move(D)),
      domain_(domain), ts_(ts) {
  if (A_.rows() != A_.cols()) throw std::invalid_argument("A must be square");
  if (B_.rows() != A_.rows()) throw std::invalid_argument("B row count mismatch");
  if (C_.cols() != A_.cols()) throw std::invalid_argument("C column count mismatch");
  if (D_.rows() != C_.rows() || D_.cols() != B_.cols()) {
    throw std::invalid_argument("D dimension mismatch");
  }
  if (domain_ == Domain::discrete && !(ts_ > 0.0)) {
    throw std::invalid_argument("discrete model requires a positive sample time");
  }
}

StateSpaceModel StateSpaceModel::from_tf(const TransferFunction& g) {
  if (!g.is_proper()) throw std::invalid_argument("improper transfer function");
  const int n = g.den().degree();
  const double a0 = g.den().leading();

  // Monic denominator a_1..a_n and front-padded numerator b_0..b_n.
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    a[static_cast<std::size_t>(i)] = g.den().coeff_of_power(n - i) / a0;
  }
  if (!g.num().is_zero()) {
    const int m = g.num().degree();
    for (int i = 0; i <= m; ++i) {
      b[static_cast<std::size_t>(n - m + i)] = g.num().coeff_of_power(m - i) / a0;
    }
  }

  const double d = b[0];
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, 1);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(1, n);
  Eigen::MatrixXd D(1, 1);
  D(0, 0) = d;
  for (int i = 0; i < n; ++i) {
    A(0, i) = -a[static_cast<std::size_t>(i) + 1];
    C(0, i) = b[static_cast<std::size_t>(i) + 1] - d * a[static_cast<std::size_t>(i) + 1];
  }
  for (int i = 1; i < n; ++i) A(i, i - 1) = 1.0;
  if (n > 0) B(0, 0) = 1.0;
  return StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D),
                         g.domain(), g.sample_time());
}

TransferFunction StateSpaceModel::to_tf(int input, int output) const {
  if (input < 0 || input >= inputs() || output < 0 || output >= outputs()) {
    throw std::invalid_argument("to_tf: channel out of range");
  }
  const int n = order();
  const double d = D_(output, input);
  if (n == 0) {
    return is_discrete()
               ? TransferFunction::discrete({d}, {1.0}, ts_)
               : TransferFunction::continuous({d}, {1.0});
  }
  const Eigen::VectorXd b = B_.col(input);
  const Eigen::RowVectorXd c = C_.row(output);

  // det(xI - A + b c) = det(xI - A) (1 + c (xI - A)^{-1} b)
  const std::vector<double> den = char_poly(A_);
  const std::vector<double> shifted = char_poly(A_ - b * c);
  std::vector<double> num(den.size());
  for (std::size_t i = 0; i < den.size(); ++i) {
    num[i] = shifted[i] - den[i] + d * den[i];
  }
  return is_discrete()
             ? TransferFunction::discrete(Polynomial(std::move(num)),
                                          Polynomial(std::vector<double>(den)), ts_)
             : TransferFunction::continuous(Polynomial(std::move(num)),
                                            Polynomial(std::vector<double>(den)));
}

StateSpaceModel StateSpaceModel::discretize_zoh(double ts) const {
  if (is_discrete()) {
    throw std::invalid_argument("model is already discrete");
  }
  if (!(ts > 0.0)) throw std::invalid_argument("sample time must be positive");
  const int n = order();
  const int m = inputs();
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + m, n + m);
  aug.topLeftCorner(n, n) = A_ * ts;
  aug.topRightCorner(n, m) = B_ * ts;
  const Eigen::MatrixXd e = aug.exp();
  if (!e.allFinite()) {
    throw std::runtime_error("zoh: matrix exponential is not finite");
  }
  return StateSpaceModel(e.topLeftCorner(n, n), e.topRightCorner(n, m), C_, D_,
                         Domain::discrete, ts);
}

Eigen::VectorXd StateSpaceModel::advance(const Eigen::VectorXd& x,
                                         const Eigen::VectorXd& u) const {
  return A_ * x + B_ * u;
}

TransferFunction zoh_discretize(const TransferFunction& g, double ts) {
  if (g.is_discrete()) {
    throw std::invalid_argument("zoh_discretize expects a continuous system");
  }
  return StateSpaceModel::from_tf(g).discretize_zoh(ts).to_tf();
}

}  // namespace dobsim
