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

#include "dobsim/dob.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/dd.hpp"
#include "dobsim/state_space.hpp"
#include "dobsim/tolerances.hpp"

namespace dobsim {

namespace {

void require_shared_ts(const DobConfiguration& cfg) {
  if (!cfg.controller.is_discrete() || !cfg.nominal.is_discrete() ||
      !cfg.q.is_discrete() || !cfg.truth_plant().is_discrete()) {
    throw std::invalid_argument("observer loop blocks must be discrete");
  }
  const double ts = cfg.nominal.sample_time();
  for (const TransferFunction* g :
       {&cfg.controller, &cfg.q, &cfg.truth_plant()}) {
    if (std::abs(g->sample_time() - ts) > 1e-12 * ts) {
      throw std::invalid_argument("sample time mismatch in observer loop");
    }
  }
}

TransferFunction q_over_gn(const TransferFunction& q, const TransferFunction& gn) {
  if (q.is_zero()) {
    return TransferFunction::discrete({0.0}, {1.0}, q.sample_time());
  }
  return TransferFunction::discrete(q.num() * gn.den(), q.den() * gn.num(),
                                    q.sample_time());
}

}  // namespace

void DobConfiguration::validate_runtime() const {
  require_shared_ts(*this);
  if (nominal.is_zero()) {
    throw std::invalid_argument("nominal model must be invertible");
  }
  if (!q.is_zero()) {
    if (!q.is_strictly_proper()) {
      throw std::invalid_argument(
          "algebraic loop: Q must be strictly proper (or identically zero)");
    }
    if (std::abs(q.dc_gain() - 1.0) > tol::q_unity_dc) {
      throw std::invalid_argument("Q filter must have unity DC gain");
    }
    if (!q_over_gn(q, nominal).is_proper()) {
      throw std::invalid_argument("improper transfer function: Q/Gn");
    }
  }
}

DobLoop::DobLoop(const DobConfiguration& cfg)
    : c_((cfg.validate_runtime(), cfg.controller)),
      q_gn_inv_(q_over_gn(cfg.q, cfg.nominal)),
      q_(cfg.q) {}

void DobLoop::reset() {
  c_.reset();
  q_gn_inv_.reset();
  q_.reset();
  last_ = {};
}

double DobLoop::step(double r, double y) {
  const double u1 = c_.step(r - y);
  const double model_inv = q_gn_inv_.step(y);
  const double q_u = q_.peek();
  const double dhat = model_inv - q_u;
  const double u = u1 - dhat;
  q_.step(u);
  last_ = {u1, u, dhat};
  return u;
}

ClosedLoopTfs dob_closed_loop_with_q(const DobConfiguration& cfg,
                                     const TransferFunction& q) {
  require_shared_ts(cfg);
  const double ts = cfg.nominal.sample_time();
  const Polynomial& nc = cfg.controller.num();
  const Polynomial& dc = cfg.controller.den();
  const Polynomial& nn = cfg.nominal.num();
  const Polynomial& dn = cfg.nominal.den();
  const Polynomial& nq = q.num();
  const Polynomial& dq = q.den();
  const Polynomial& ng = cfg.truth_plant().num();
  const Polynomial& dg = cfg.truth_plant().den();

  // Common denominator dc dn dq dg:
  //   Gn(1-Q)        -> nn (dq - nq) dc dg
  //   G (C Gn + Q)   -> ng (nc nn dq + nq dc dn)
  const Polynomial mismatch_path = nn * (dq - nq) * (dc * dg);
  const Polynomial regulation_path = ng * (nc * nn * dq + nq * (dc * dn));
  const Polynomial den = mismatch_path + regulation_path;

  return {TransferFunction::discrete(nc * nn * (ng * dq), den, ts),
          TransferFunction::discrete(mismatch_path, den, ts)};
}

ClosedLoopTfs dob_closed_loop(const DobConfiguration& cfg) {
  return dob_closed_loop_with_q(cfg, cfg.q);
}

double dob_sim_vs_tf_deviation(const DobConfiguration& cfg,
                               std::span<const double> r,
                               std::span<const double> d) {
  cfg.validate_runtime();
  const TransferFunction& truth = cfg.truth_plant();
  if (!truth.is_strictly_proper()) {
    throw std::invalid_argument("truth plant must be strictly proper");
  }
  const std::size_t n = std::max(r.size(), d.size());
  auto at = [](std::span<const double> seq, std::size_t k) {
    return k < seq.size() ? seq[k] : 0.0;
  };

  // Per-sample loop against the truth plant.
  DobLoop loop(cfg);
  FilterState plant(truth);
  std::vector<double> y_sim(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double y = plant.peek() + at(d, k);
    const double u = loop.step(at(r, k), y);
    plant.step(u);
    y_sim[k] = y;
  }

  // Closed-form reference, assembled and filtered in compensated arithmetic.
  using namespace detail;
  const ddpoly nc = to_dd(cfg.controller.num().coeffs());
  const ddpoly dc = to_dd(cfg.controller.den().coeffs());
  const ddpoly nn = to_dd(cfg.nominal.num().coeffs());
  const ddpoly dn = to_dd(cfg.nominal.den().coeffs());
  const ddpoly nq = to_dd(cfg.q.num().coeffs());
  const ddpoly dq = to_dd(cfg.q.den().coeffs());
  const ddpoly ng = to_dd(truth.num().coeffs());
  const ddpoly dg = to_dd(truth.den().coeffs());

  const ddpoly mismatch = conv(conv(nn, psub(dq, nq)), conv(dc, dg));
  const ddpoly regulation = conv(ng, padd(conv(conv(nc, nn), dq), conv(nq, conv(dc, dn))));
  const ddpoly den = padd(mismatch, regulation);
  const ddpoly t_ry_num = conv(conv(nc, nn), conv(ng, dq));

  std::vector<double> r_full(n), d_full(n);
  for (std::size_t k = 0; k < n; ++k) {
    r_full[k] = at(r, k);
    d_full[k] = at(d, k);
  }
  const std::vector<double> via_r = filter_response(t_ry_num, den, r_full);
  const std::vector<double> via_d = filter_response(mismatch, den, d_full);

  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    worst = std::max(worst, std::abs(y_sim[k] - (via_r[k] + via_d[k])));
  }
  return worst;
}

TransferFunction q_dob_s() {
  return TransferFunction::continuous({1.0}, {0.25, 1.0, 1.0});
}

TransferFunction q_dob_z(double ts) { return zoh_discretize(q_dob_s(), ts); }

}  // namespace dobsim
