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

#include <Eigen/Dense>

#include "dobsim/transfer_function.hpp"

namespace dobsim {

/// (A, B, C, D) realization, continuous or discrete.
class StateSpaceModel {
 public:
  StateSpaceModel(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd C,
                  Eigen::MatrixXd D, Domain domain, double ts = 0.0);

  const Eigen::MatrixXd& A() const { return A_; }
  const Eigen::MatrixXd& B() const { return B_; }
  const Eigen::MatrixXd& C() const { return C_; }
  const Eigen::MatrixXd& D() const { return D_; }
  Domain domain() const { return domain_; }
  bool is_discrete() const { return domain_ == Domain::discrete; }
  double sample_time() const { return ts_; }

  int order() const { return static_cast<int>(A_.rows()); }
  int inputs() const { return static_cast<int>(B_.cols()); }
  int outputs() const { return static_cast<int>(C_.rows()); }

  /// Controllable-canonical realization; throws "improper transfer function"
  /// for systems with negative relative degree.
  static StateSpaceModel from_tf(const TransferFunction& g);

  /// SISO channel back to a transfer function (characteristic polynomials
  /// via the Faddeev-LeVerrier recursion).
  TransferFunction to_tf(int input = 0, int output = 0) const;

  /// Exact zero-order-hold equivalent via the matrix exponential of the
  /// augmented [[A, B], [0, 0]] block. Works for singular A.
  StateSpaceModel discretize_zoh(double ts) const;

  /// One discrete-time update x' = A x + B u.
  Eigen::VectorXd advance(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const;

 private:
  Eigen::MatrixXd A_, B_, C_, D_;
  Domain domain_;
  double ts_;
};

/// ZOH discretization of a proper continuous transfer function.
TransferFunction zoh_discretize(const TransferFunction& g, double ts);

}  // namespace dobsim
