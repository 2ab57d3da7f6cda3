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

#include "dobsim/vehicle.hpp"

#include <stdexcept>

namespace dobsim {

void VehicleParams::validate() const {
  if (!(m > 0.0)) throw std::invalid_argument("vehicle: m must be positive");
  if (!(mu > 0.0) || mu > 1.0) {
    throw std::invalid_argument("vehicle: mu must be in (0, 1]");
  }
  if (!(V > 0.0)) throw std::invalid_argument("vehicle: V must be positive");
  if (!(J > 0.0)) throw std::invalid_argument("vehicle: J must be positive");
  if (!(Cf > 0.0) || !(Cr > 0.0)) {
    throw std::invalid_argument("vehicle: cornering stiffness must be positive");
  }
  if (!(lf > 0.0) || !(lr > 0.0) || !(ls > 0.0) || !(l_wind > 0.0)) {
    throw std::invalid_argument("vehicle: lengths must be positive");
  }
}

UncertaintyCorner corner(char label) {
  switch (label) {
    case 'a': return {'a', 50.0 / 3.6, 1600.0};
    case 'b': return {'b', 50.0 / 3.6, 3200.0};
    case 'c': return {'c', 90.0 / 3.6, 1600.0};
    case 'd': return {'d', 90.0 / 3.6, 3200.0};
    default: throw std::invalid_argument("unknown uncertainty corner label");
  }
}

StateSpaceModel error_dynamics(const VehicleParams& p) {
  if (p.V == 0.0) throw std::invalid_argument("zero speed singular");
  p.validate();
  const double mv = p.virtual_mass();
  const double V = p.V;

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(4, 4);
  A(0, 0) = -(p.Cf + p.Cr) / (mv * V);
  A(0, 1) = (p.Cr * p.lr - p.Cf * p.lf) / (mv * V * V) - 1.0;
  A(1, 0) = (p.Cr * p.lr - p.Cf * p.lf) / p.J;
  A(1, 1) = -(p.Cf * p.lf * p.lf + p.Cr * p.lr * p.lr) / (p.J * V);
  A(2, 1) = 1.0;
  A(3, 0) = V;
  A(3, 2) = V;

  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(4, 3);
  B(0, 0) = p.Cf / (mv * V);
  B(1, 0) = p.Cf * p.lf / p.J;
  B(2, 1) = -V;
  B(0, 2) = 1.0 / (mv * V);
  B(1, 2) = p.l_wind / p.J;

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(1, 4);
  C(0, 2) = p.ls;
  C(0, 3) = 1.0;

  return StateSpaceModel(std::move(A), std::move(B), std::move(C),
                         Eigen::MatrixXd::Zero(1, 3), Domain::continuous);
}

StateSpaceModel corner_plant(const UncertaintyCorner& c, const VehicleParams& base) {
  VehicleParams p = base;
  p.V = c.V;
  p.m = c.m;
  return error_dynamics(p);
}

TransferFunction nominal_plant_s() {
  const Polynomial num{4713.0, 1.598e5, 7.51e5};
  const Polynomial den = Polynomial{1.242, 933.8, 10610.0} * Polynomial{1.0, 0.0, 0.0};
  return TransferFunction::continuous(num, den);
}

TransferFunction nominal_plant_z(double ts) {
  return zoh_discretize(nominal_plant_s(), ts);
}

}  // namespace dobsim
