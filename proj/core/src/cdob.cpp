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

#include "dobsim/cdob.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/dd.hpp"
#include "dobsim/state_space.hpp"
#include "dobsim/tolerances.hpp"

namespace dobsim {

namespace {

void require_shared_ts(const CdobConfiguration& cfg) {
  if (!cfg.controller.is_discrete() || !cfg.nominal.is_discrete() ||
      !cfg.q.is_discrete() || !cfg.truth_plant().is_discrete()) {
    throw std::invalid_argument("observer loop blocks must be discrete");
  }
  const double ts = cfg.nominal.sample_time();
  for (const TransferFunction* g : {&cfg.controller, &cfg.q, &cfg.truth_plant()}) {
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

// Synthetic division by (z - 1), remainder dropped.
Polynomial deflate_at_one(const Polynomial& p) {
  const auto c = p.coeffs();
  std::vector<double> quotient(c.size() - 1);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    acc += c[i];
    quotient[i] = acc;
  }
  return Polynomial(std::move(quotient));
}

// An integrating nominal model carries a double root at z = 1 in its
// denominator. The Q/Gn estimate filter must null constant measurements
// exactly, so that factor is realized as an explicit second difference in
// front of the deflated remainder; with rounded coefficients alone the
// leaked DC gain (~1e-13) would accumulate through the reconstruction
// integrators.
bool has_double_root_at_one(const Polynomial& p) {
  if (p.degree() < 2) return false;
  double scale = 0.0;
  for (double c : p.coeffs()) scale += std::abs(c);
  const Polynomial once = deflate_at_one(p);
  double scale_once = 0.0;
  for (double c : once.coeffs()) scale_once += std::abs(c);
  return std::abs(p.eval(1.0)) <= 1e-9 * scale &&
         std::abs(once.eval(1.0)) <= 1e-9 * scale_once;
}

}  // namespace

void CdobConfiguration::validate_runtime() const {
  require_shared_ts(*this);
  if (delay_samples < 0) {
    throw std::invalid_argument("delay must be a non-negative sample count");
  }
  if (nominal.is_zero()) {
    throw std::invalid_argument("nominal model must be invertible");
  }
  if (!nominal.is_proper()) {
    throw std::invalid_argument("improper transfer function: Gn");
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

namespace {

FilterState make_estimate_filter(const CdobConfiguration& cfg, bool differenced) {
  if (!differenced) return FilterState(q_over_gn(cfg.q, cfg.nominal));
  // The differencer is z^-2 (z-1)^2, so the companion filter carries z^2 to
  // keep the cascade aligned with Q dn / (dq nn).
  const Polynomial reduced = deflate_at_one(deflate_at_one(cfg.nominal.den()));
  return FilterState(TransferFunction::discrete(
      (cfg.q.num() * reduced).shifted_up(2), cfg.q.den() * cfg.nominal.num(),
      cfg.q.sample_time()));
}

}  // namespace

CdobLoop::CdobLoop(const CdobConfiguration& cfg)
    : c_((cfg.validate_runtime(), cfg.controller)),
      difference_input_(!cfg.q.is_zero() &&
                        has_double_root_at_one(cfg.nominal.den())),
      q_gn_inv_(make_estimate_filter(cfg, difference_input_)),
      q_(cfg.q),
      gn_(cfg.nominal),
      u_hist_(static_cast<std::size_t>(cfg.delay_samples) + 1, 0.0) {}

void CdobLoop::reset() {
  c_.reset();
  q_gn_inv_.reset();
  q_.reset();
  gn_.reset();
  y_prev_ = 0.0;
  y_prev2_ = 0.0;
  std::fill(u_hist_.begin(), u_hist_.end(), 0.0);
  hist_pos_ = 0;
  last_ = {};
}

double CdobLoop::step(double r, double y_delayed) {
  double estimate_input = y_delayed;
  if (difference_input_) {
    estimate_input = (y_delayed - 2.0 * y_prev_) + y_prev2_;
    y_prev2_ = y_prev_;
    y_prev_ = y_delayed;
  }
  const double model_inv = q_gn_inv_.step(estimate_input);
  const double q_u = q_.peek();
  const double dhat = q_u - model_inv;
  const double y_comp = y_delayed + gn_.step(dhat);
  const double u = c_.step(r - y_comp);
  q_.step(u);
  hist_pos_ = (hist_pos_ + u_hist_.size() - 1) % u_hist_.size();
  u_hist_[hist_pos_] = u;
  last_ = {dhat, y_comp, u};
  return u;
}

double CdobLoop::past_input(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= u_hist_.size()) return 0.0;
  return u_hist_[(hist_pos_ + static_cast<std::size_t>(k)) % u_hist_.size()];
}

CdobClosedLoop cdob_closed_loop_with_q(const CdobConfiguration& cfg,
                                       const TransferFunction& q) {
  require_shared_ts(cfg);
  const double ts = cfg.nominal.sample_time();
  const int n = cfg.delay_samples;
  if (n < 0) throw std::invalid_argument("delay must be non-negative");
  const Polynomial& nc = cfg.controller.num();
  const Polynomial& dc = cfg.controller.den();
  const Polynomial& nn = cfg.nominal.num();
  const Polynomial& dn = cfg.nominal.den();
  const Polynomial& nq = q.num();
  const Polynomial& dq = q.den();

  // Over the common denominator dc dn dq z^N:
  //   1            -> dc dn dq z^N
  //   C Gn Q       -> nc nn nq z^N
  //   C Gn z^-N (1-Q) -> nc nn (dq - nq)
  const Polynomial head = (dc * dn * dq + nc * nn * nq).shifted_up(n);
  const Polynomial tail = nc * nn * (dq - nq);
  const Polynomial den = head + tail;

  return {TransferFunction::discrete(nc * nn * dq, den, ts),
          TransferFunction::discrete(head, den, ts), den};
}

CdobClosedLoop cdob_closed_loop(const CdobConfiguration& cfg) {
  return cdob_closed_loop_with_q(cfg, cfg.q);
}

double cdob_sim_vs_tf_deviation(const CdobConfiguration& cfg,
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

  CdobLoop loop(cfg);
  FilterState plant(truth);
  DelayLine delay(cfg.delay_samples);
  std::vector<double> y_sim(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double undelayed = plant.peek();
    const double y_meas = delay.step(undelayed) + at(d, k);
    const double u = loop.step(at(r, k), y_meas);
    plant.step(u);
    y_sim[k] = y_meas;
  }

  using namespace detail;
  const ddpoly nc = to_dd(cfg.controller.num().coeffs());
  const ddpoly dc = to_dd(cfg.controller.den().coeffs());
  const ddpoly nn = to_dd(cfg.nominal.num().coeffs());
  const ddpoly dn = to_dd(cfg.nominal.den().coeffs());
  const ddpoly nq = to_dd(cfg.q.num().coeffs());
  const ddpoly dq = to_dd(cfg.q.den().coeffs());

  const ddpoly head = shift_up(padd(conv(conv(dc, dn), dq), conv(conv(nc, nn), nq)),
                               cfg.delay_samples);
  const ddpoly den = padd(head, conv(conv(nc, nn), psub(dq, nq)));
  const ddpoly t_ry_num = conv(conv(nc, nn), dq);

  std::vector<double> r_full(n), d_full(n);
  for (std::size_t k = 0; k < n; ++k) {
    r_full[k] = at(r, k);
    d_full[k] = at(d, k);
  }
  const std::vector<double> via_r = filter_response(t_ry_num, den, r_full);
  const std::vector<double> via_d = filter_response(head, den, d_full);

  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    worst = std::max(worst, std::abs(y_sim[k] - (via_r[k] + via_d[k])));
  }
  return worst;
}

double nd_identity_deviation(const CdobConfiguration& cfg,
                             std::span<const double> r) {
  cfg.validate_runtime();
  if (cfg.truth && !rational_identity(*cfg.truth, cfg.nominal, 1e-15)) {
    throw std::invalid_argument(
        "network-disturbance identity requires truth = Gn z^-N");
  }

  CdobLoop loop(cfg);
  FilterState plant(cfg.nominal);
  DelayLine delay(cfg.delay_samples);
  FilterState q_net(cfg.q);
  double worst = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double y_meas = delay.step(plant.peek());
    const double u = loop.step(r[k], y_meas);
    plant.step(u);
    const double dhat = loop.last().dhat;
    const double network = q_net.step(u - loop.past_input(cfg.delay_samples));
    worst = std::max(worst, std::abs(dhat - network));
  }
  return worst;
}

TransferFunction q_cdob_s() {
  return TransferFunction::continuous({1.0}, {0.0004, 0.04, 1.0});
}

TransferFunction q_cdob_z(double ts) { return zoh_discretize(q_cdob_s(), ts); }

}  // namespace dobsim
