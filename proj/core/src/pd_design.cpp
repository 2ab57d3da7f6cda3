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

#include "dobsim/pd_design.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dobsim/tolerances.hpp"

namespace dobsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct LoopPolys {
  Polynomial num, den;
  double ts;

  std::complex<double> at_omega(double omega) const {
    const auto z = std::exp(std::complex<double>(0.0, omega * ts));
    return num.eval(z) / den.eval(z);
  }
};

LoopPolys open_loop(const PDGains& g, const TransferFunction& gn_z,
                    DerivativeForm form) {
  const TransferFunction c = pd_controller(g, gn_z.sample_time(), form);
  return {c.num() * gn_z.num(), c.den() * gn_z.den(), gn_z.sample_time()};
}

bool char_poly_stable(const LoopPolys& loop) {
  const Polynomial cp = loop.den + loop.num;
  if (cp.degree() == 0) return !cp.is_zero();
  for (const auto& r : cp.roots()) {
    if (std::abs(r) >= 1.0 - tol::stability_band) return false;
  }
  return true;
}

// Divergent loops make the supremum meaningless; marginal ones (an open
// loop keeps the plant integrators on the circle) still evaluate. The band
// absorbs the numerical splitting of repeated unit-circle roots.
bool char_poly_divergent(const LoopPolys& loop) {
  const Polynomial cp = loop.den + loop.num;
  if (cp.degree() == 0) return cp.is_zero();
  for (const auto& r : cp.roots()) {
    if (std::abs(r) > 1.0 + 1e-6) return true;
  }
  return false;
}

// Gain crossovers on the standard sweep; returns the smallest margin.
double phase_margin_of(const LoopPolys& loop) {
  const double hi = std::numbers::pi / loop.ts * (1.0 - 1e-9);
  const double lo = 1e-4;
  const int points_per_decade = 400;
  const int n = static_cast<int>(std::ceil(std::log10(hi / lo) * points_per_decade));

  std::vector<double> omegas;
  omegas.reserve(static_cast<std::size_t>(n) + 2);
  // z = 1 belongs to the contour; include it when it is not a pole.
  if (std::abs(loop.den.eval(1.0)) > 1e-9 * std::abs(loop.den.coeffs()[0])) {
    omegas.push_back(0.0);
  }
  const double log_lo = std::log10(lo), log_hi = std::log10(hi);
  for (int i = 0; i <= n; ++i) {
    omegas.push_back(std::pow(10.0, log_lo + (log_hi - log_lo) * i / n));
  }

  std::vector<double> log_mag(omegas.size());
  std::size_t on_unity = 0;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    log_mag[i] = std::log(std::abs(loop.at_omega(omegas[i])));
    if (std::abs(log_mag[i]) < 1e-13) ++on_unity;
  }
  if (on_unity > omegas.size() / 2) {
    throw std::runtime_error("no isolated gain crossover");
  }

  double best = std::numeric_limits<double>::infinity();
  bool found = false;
  auto margin_at = [&](double omega) {
    const double phase = std::arg(loop.at_omega(omega)) * 180.0 / std::numbers::pi;
    return 180.0 + phase;
  };

  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (std::abs(log_mag[i]) < 1e-13) {
      best = std::min(best, margin_at(omegas[i]));
      found = true;
      continue;
    }
    if (i + 1 == omegas.size()) break;
    if (log_mag[i] * log_mag[i + 1] < 0.0) {
      double a = std::max(omegas[i], 1e-12), b = omegas[i + 1];
      const double sign_a = log_mag[i];
      double mid = std::sqrt(a * b);
      for (int it = 0; it < 200; ++it) {
        mid = std::sqrt(a * b);
        const double v = std::log(std::abs(loop.at_omega(mid)));
        if (std::abs(v) < tol::crossover_log_mag) break;
        if (v * sign_a > 0.0) {
          a = mid;
        } else {
          b = mid;
        }
      }
      best = std::min(best, margin_at(mid));
      found = true;
    }
  }
  if (!found) throw std::runtime_error("no gain crossover");
  return best;
}

double mixed_sens_of(const LoopPolys& loop, const WeightSpec& w) {
  if (char_poly_divergent(loop)) {
    throw std::runtime_error("unstable nominal loop");
  }
  const TransferFunction ws = sensitivity_weight(w);
  const TransferFunction wt = comp_sensitivity_weight(w);
  const double lo = 1e-2;
  const double hi = std::numbers::pi / loop.ts * 0.999;
  const int n = 2000;
  const double log_lo = std::log10(lo), log_hi = std::log10(hi);
  double sup = 0.0;
  for (int i = 0; i < n; ++i) {
    const double omega = std::pow(10.0, log_lo + (log_hi - log_lo) * i / (n - 1));
    const auto l = loop.at_omega(omega);
    const auto s = 1.0 / (1.0 + l);
    const auto t = l / (1.0 + l);
    const std::complex<double> jw(0.0, omega);
    const double v = std::abs(ws.eval(jw) * s) + std::abs(wt.eval(jw) * t);
    sup = std::max(sup, v);
  }
  return sup;
}

}  // namespace

TransferFunction pd_controller(const PDGains& g, double ts, DerivativeForm form) {
  if (!(ts > 0.0)) throw std::invalid_argument("sample time must be positive");
  switch (form) {
    case DerivativeForm::backward:
      return TransferFunction::discrete({g.kp * ts + g.kd, -g.kd}, {ts, 0.0}, ts);
    case DerivativeForm::forward:
      return TransferFunction::discrete({g.kd, g.kp * ts - g.kd}, {ts}, ts);
    case DerivativeForm::trapezoidal:
      return TransferFunction::discrete({g.kp * ts + 2.0 * g.kd, g.kp * ts - 2.0 * g.kd},
                                        {ts, ts}, ts);
  }
  throw std::invalid_argument("unknown derivative form");
}

void WeightSpec::validate() const {
  if (!(ls > 0.0 && ls < 1.0 && hs > 1.0)) {
    throw std::invalid_argument("weights: need 0 < ls < 1 < hs");
  }
  if (!(lT > 0.0 && lT < 1.0 && hT > 1.0)) {
    throw std::invalid_argument("weights: need 0 < lT < 1 < hT");
  }
  if (!(ws > 0.0 && wT > 0.0)) {
    throw std::invalid_argument("weights: corner frequencies must be positive");
  }
}

TransferFunction sensitivity_weight(const WeightSpec& w) {
  w.validate();
  return TransferFunction::continuous({1.0, w.ws}, {w.hs, w.ws * w.ls});
}

TransferFunction comp_sensitivity_weight(const WeightSpec& w) {
  w.validate();
  return TransferFunction::continuous({w.hT, w.wT * w.lT}, {1.0, w.wT});
}

double phase_margin_deg(const TransferFunction& loop) {
  if (!loop.is_discrete()) {
    throw std::invalid_argument("phase margin sweep expects a discrete loop");
  }
  if (!loop.is_proper()) {
    throw std::invalid_argument("improper transfer function");
  }
  return phase_margin_of({loop.num(), loop.den(), loop.sample_time()});
}

double mixed_sensitivity_sup(const PDGains& g, const TransferFunction& gn_z,
                             const WeightSpec& w, DerivativeForm form) {
  return mixed_sens_of(open_loop(g, gn_z, form), w);
}

RegionPoint evaluate_design_point(const PDGains& g, const TransferFunction& gn_z,
                                  const PhaseMarginSpec& pm, const WeightSpec& w,
                                  DerivativeForm form) {
  RegionPoint pt;
  pt.kd = g.kd;
  pt.kp = g.kp;
  pt.pm_deg = kNaN;
  pt.mixed_sens = kNaN;

  const LoopPolys loop = open_loop(g, gn_z, form);
  pt.stable = char_poly_stable(loop);
  try {
    pt.pm_deg = phase_margin_of(loop);
  } catch (const std::runtime_error&) {
    pt.pm_deg = kNaN;
  }
  try {
    pt.mixed_sens = mixed_sens_of(loop, w);
  } catch (const std::runtime_error&) {
    pt.mixed_sens = kNaN;
  }
  pt.feasible = pt.stable && std::isfinite(pt.pm_deg) &&
                pt.pm_deg >= pm.min_deg && pt.pm_deg <= pm.max_deg &&
                std::isfinite(pt.mixed_sens) && pt.mixed_sens < 1.0;
  return pt;
}

std::vector<RegionPoint> feasible_region(const RegionRequest& req,
                                         const TransferFunction& gn_z) {
  if (req.n_kd < 2 || req.n_kp < 2) {
    throw std::invalid_argument("region grid must be at least 2x2");
  }
  req.weights.validate();
  std::vector<RegionPoint> out;
  out.reserve(static_cast<std::size_t>(req.n_kd) * static_cast<std::size_t>(req.n_kp));
  for (int i = 0; i < req.n_kd; ++i) {
    const double kd = req.kd_min + (req.kd_max - req.kd_min) * i / (req.n_kd - 1);
    for (int j = 0; j < req.n_kp; ++j) {
      const double kp = req.kp_min + (req.kp_max - req.kp_min) * j / (req.n_kp - 1);
      out.push_back(
          evaluate_design_point({kd, kp}, gn_z, req.pm, req.weights, req.form));
    }
  }
  return out;
}

}  // namespace dobsim
