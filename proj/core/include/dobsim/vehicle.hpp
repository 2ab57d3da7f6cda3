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

#include "dobsim/state_space.hpp"
#include "dobsim/transfer_function.hpp"

namespace dobsim {

/// Single-track lateral model parameters. Friction folds into the virtual
/// mass m/mu only; tire stiffnesses stay nominal.
struct VehicleParams {
  double m = 2000.0;       // vehicle mass [kg]
  double mu = 1.0;         // road friction coefficient, (0, 1]
  double V = 60.0 / 3.6;   // longitudinal speed [m/s]
  double J = 3728.0;       // yaw moment of inertia [kg m^2]
  double Cf = 195000.0;    // front cornering stiffness [N/rad]
  double Cr = 150000.0;    // rear cornering stiffness [N/rad]
  double lf = 1.3008;      // CG to front axle [m]
  double lr = 1.5453;      // CG to rear axle [m]
  double ls = 2.0;         // preview distance of the deviation sensor [m]
  double l_wind = 1.0;     // crosswind pressure point to CG [m]

  double virtual_mass() const { return m / mu; }

  /// Throws std::invalid_argument on nonpositive quantities or mu outside
  /// (0, 1].
  void validate() const;
};

/// State of the lateral error dynamics; the realization below uses this
/// ordering.
struct VehicleState {
  double beta = 0.0;  // side slip [rad]
  double r = 0.0;     // yaw rate [rad/s]
  double dpsi = 0.0;  // heading error against the path [rad]
  double y = 0.0;     // lateral deviation [m]

  Eigen::Vector4d as_vector() const { return {beta, r, dpsi, y}; }
  static VehicleState from_vector(const Eigen::Vector4d& x) {
    return {x(0), x(1), x(2), x(3)};
  }
};

/// Vertex of the (speed, mass) uncertainty box.
struct UncertaintyCorner {
  char label;  // 'a'..'d'
  double V;    // [m/s]
  double m;    // [kg]
};

/// Corners: a=(50 km/h, 1600 kg), b=(50, 3200), c=(90, 1600), d=(90, 3200).
UncertaintyCorner corner(char label);

/// Continuous error dynamics. States (beta, r, dpsi, y); inputs
/// (delta_f [rad], rho_ref [1/m], F_wind [N]); output y_s = y + ls*dpsi.
///
///   beta' = -(Cf+Cr)/(mv*V) beta + ((Cr*lr - Cf*lf)/(mv*V^2) - 1) r
///           + Cf/(mv*V) delta_f + F_wind/(mv*V)
///   r'    = (Cr*lr - Cf*lf)/J beta - (Cf*lf^2 + Cr*lr^2)/(J*V) r
///           + Cf*lf/J delta_f + l_wind*F_wind/J
///   dpsi' = r - V rho_ref
///   y'    = V beta + V dpsi
StateSpaceModel error_dynamics(const VehicleParams& p);

/// error_dynamics with (V, m) overridden by the corner.
StateSpaceModel corner_plant(const UncertaintyCorner& c, const VehicleParams& base);

/// The fixed nominal steering-to-deviation design plant (continuous).
/// All controller and observer synthesis anchors on this object.
TransferFunction nominal_plant_s();

/// ZOH discretization of the nominal design plant.
TransferFunction nominal_plant_z(double ts = 0.01);

}  // namespace dobsim
