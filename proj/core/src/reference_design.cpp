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

#include "dobsim/reference_design.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <span>

#include "dobsim/cdob.hpp"
#include "dobsim/dob.hpp"
#include "dobsim/state_space.hpp"
#include "dobsim/tolerances.hpp"
#include "dobsim/vehicle.hpp"

namespace dobsim {

namespace {

constexpr double kTs = 0.01;

// Rounded reference coefficients of the stock design (4 significant digits).
constexpr double kPlantNumZ[] = {0.04867, -0.07432, 0.02046, 0.005954};
constexpr double kPlantDenZ[] = {1.0, -2.892, 2.784, -0.8927, 0.0005429};
constexpr double kQDobNumZ[] = {0.0001974, 0.0001974};
constexpr double kQDobDenZ[] = {1.0, -1.96, 0.9608};
constexpr double kQCdobNumZ[] = {0.0902, 0.06461};
constexpr double kQCdobDenZ[] = {1.0, -1.213, 0.3679};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

// Largest relative coefficient error after normalizing the leading
// denominator coefficient to one. Infinity on a length mismatch.
double max_rel_err(const TransferFunction& g, std::span<const double> num_ref,
                   std::span<const double> den_ref) {
  const double lead = g.den().leading();
  const auto num = g.num().coeffs();
  const auto den = g.den().coeffs();
  if (num.size() != num_ref.size() || den.size() != den_ref.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    worst = std::max(worst, std::abs(num[i] / lead - num_ref[i]) / std::abs(num_ref[i]));
  }
  for (std::size_t i = 0; i < den.size(); ++i) {
    worst = std::max(worst, std::abs(den[i] / lead - den_ref[i]) / std::abs(den_ref[i]));
  }
  return worst;
}

TransferFunction unity_q() { return TransferFunction::discrete({1.0}, {1.0}, kTs); }
TransferFunction zero_q() { return TransferFunction::discrete({0.0}, {1.0}, kTs); }

}  // namespace

std::vector<std::string> reference_check_names() {
  return {"zoh-nominal-plant",
          "zoh-q-dob",
          "zoh-q-cdob",
          "dob-model-regulation-limit",
          "dob-disturbance-rejection-limit",
          "dob-observer-off-limit",
          "cdob-delay-free-characteristic",
          "cdob-network-disturbance-identity",
          "design-point-stability",
          "design-point-margins"};
}

std::vector<CheckResult> run_reference_checks(const CheckOptions& options) {
  std::vector<CheckResult> results;
  const TransferFunction gn_s = nominal_plant_s();
  const TransferFunction gn_scaled = TransferFunction::continuous(
      options.gn_num_scale * gn_s.num(), gn_s.den());
  const TransferFunction gn_z = zoh_discretize(gn_scaled, kTs);
  const TransferFunction qd = q_dob_z(kTs);
  const TransferFunction qc = q_cdob_z(kTs);
  const TransferFunction c = pd_controller(design_point, kTs);

  {
    const double err = max_rel_err(gn_z, kPlantNumZ, kPlantDenZ);
    results.push_back({"zoh-nominal-plant", err < tol::ref_plant_coeff_rel,
                       fmt("max coefficient error %.3g (limit %.3g)", err,
                           tol::ref_plant_coeff_rel)});
  }
  {
    const double err = max_rel_err(qd, kQDobNumZ, kQDobDenZ);
    const double dc = std::abs(qd.dc_gain() - 1.0);
    results.push_back(
        {"zoh-q-dob", err < tol::ref_q_dob_coeff_rel && dc <= tol::ref_q_dc_abs,
         fmt("max coefficient error %.3g (limit %.3g), |DC-1| = %.3g", err,
             tol::ref_q_dob_coeff_rel, dc)});
  }
  {
    const double err = max_rel_err(qc, kQCdobNumZ, kQCdobDenZ);
    const double dc = std::abs(qc.dc_gain() - 1.0);
    results.push_back(
        {"zoh-q-cdob", err < tol::ref_q_cdob_coeff_rel && dc <= tol::ref_q_dc_abs,
         fmt("max coefficient error %.3g (limit %.3g), |DC-1| = %.3g", err,
             tol::ref_q_cdob_coeff_rel, dc)});
  }

  const DobConfiguration dob_cfg{c, gn_z, qd};
  {
    const auto loops = dob_closed_loop_with_q(dob_cfg, unity_q());
    const TransferFunction plain = feedback(series(c, gn_z));
    const bool ry_ok = rational_identity(loops.t_ry, plain, tol::loop_identity_rel);
    const bool dy_ok = loops.t_dy.is_zero();
    results.push_back({"dob-model-regulation-limit", ry_ok,
                       ry_ok ? "T_ry == C Gn / (1 + C Gn)" : "T_ry identity failed"});
    results.push_back({"dob-disturbance-rejection-limit", dy_ok,
                       dy_ok ? "T_dy == 0" : "T_dy did not vanish"});
  }
  {
    const auto loops = dob_closed_loop_with_q(dob_cfg, zero_q());
    const TransferFunction plain = feedback(series(c, gn_z));
    const bool ok = rational_identity(loops.t_ry, plain, tol::loop_identity_rel);
    results.push_back({"dob-observer-off-limit", ok,
                       ok ? "Q == 0 reduces to the plain loop" : "identity failed"});
  }

  {
    const CdobConfiguration cdob_cfg{c, gn_z, qc, 100};
    const Polynomial den = cdob_closed_loop_with_q(cdob_cfg, unity_q()).characteristic;
    const Polynomial undelayed = c.den() * gn_z.den() + c.num() * gn_z.num();
    bool ok = den.degree() == undelayed.degree() + 100;
    for (int k = 0; ok && k < 100; ++k) {
      ok = den.coeff_of_power(k) == 0.0;
    }
    for (int k = 0; ok && k <= undelayed.degree(); ++k) {
      ok = den.coeff_of_power(k + 100) == undelayed.coeff_of_power(k);
    }
    results.push_back({"cdob-delay-free-characteristic", ok,
                       ok ? "Q == 1 removes every delayed term"
                          : "delayed terms remain with Q == 1"});
  }
  {
    const CdobConfiguration cdob_cfg{c, gn_z, qc, 100};
    std::mt19937 rng(20260809u);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> input(500);
    for (double& v : input) v = dist(rng);
    const double dev = nd_identity_deviation(cdob_cfg, input);
    results.push_back({"cdob-network-disturbance-identity",
                       dev < tol::nd_identity_abs,
                       fmt("max deviation %.3g (limit %.3g)", dev,
                           tol::nd_identity_abs)});
  }

  {
    const TransferFunction loop = series(c, gn_z);
    const bool ok = is_stable(feedback(loop));
    results.push_back({"design-point-stability", ok,
                       ok ? "closed loop strictly inside the unit circle"
                          : "closed loop not strictly stable"});
  }
  {
    const RegionPoint pt =
        evaluate_design_point(design_point, gn_z, PhaseMarginSpec{}, WeightSpec{});
    const bool ok = pt.stable && std::isfinite(pt.pm_deg) &&
                    std::isfinite(pt.mixed_sens) && pt.mixed_sens < 1.0;
    std::string detail =
        fmt("PM = %.2f deg, mixed-sensitivity sup = %.3f", pt.pm_deg, pt.mixed_sens);
    if (pt.pm_deg < 20.0 || pt.pm_deg > 80.0) {
      detail += " [PM outside [20, 80]: known property of the parallel-form "
                "backward-difference PD at this design point]";
    }
    results.push_back({"design-point-margins", ok, detail});
  }

  return results;
}

}  // namespace dobsim
