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

// Independent oracles for the tests. Everything here is deliberately written
// from first principles (quadratic formula, long division, residues) rather
// than through the library path it checks.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "dobsim/transfer_function.hpp"

namespace oracles {

using cd = std::complex<double>;

inline std::array<cd, 2> quadratic_roots(double a, double b, double c) {
  const cd disc = std::sqrt(cd(b * b - 4.0 * a * c, 0.0));
  // Avoid cancellation in the small root.
  const cd q = -0.5 * (b >= 0.0 ? (b + disc) : (b - disc));
  return {q / a, c / q};
}

// First k coefficients of the power series of num/den in z^{-1}, computed by
// explicit long division (highest-first inputs).
inline std::vector<double> long_division_series(std::vector<double> num,
                                                const std::vector<double>& den,
                                                std::size_t k) {
  // Align the dividend so its leading term has the same power as den's.
  const std::size_t deg_gap = den.size() - num.size();
  std::vector<double> rem(num.size() + deg_gap, 0.0);
  for (std::size_t i = 0; i < num.size(); ++i) rem[deg_gap + i] = num[i];

  std::vector<double> quotient(k, 0.0);
  for (std::size_t step = 0; step < k; ++step) {
    const double q = rem[0] / den[0];
    quotient[step] = q;
    for (std::size_t i = 0; i < den.size(); ++i) rem[i] -= q * den[i];
    // Shift remainder one power of z^{-1} down.
    rem.erase(rem.begin());
    rem.push_back(0.0);
  }
  return quotient;
}

// Impulse response h_0..h_{k-1} of a proper discrete TF with distinct poles,
// via partial fractions of H(z)/z: h_0 = H(0) + sum r_i, h_n = sum r_i p_i^n.
inline std::vector<double> residue_impulse_response(const dobsim::TransferFunction& g,
                                                    std::size_t k) {
  const auto poles = g.den().roots();
  std::vector<double> h(k, 0.0);
  auto den_derivative_at = [&](cd z) {
    cd acc = 0.0;
    const auto c = g.den().coeffs();
    const int n = static_cast<int>(c.size()) - 1;
    for (int i = 0; i < n; ++i) {
      acc = acc * z + c[static_cast<std::size_t>(i)] * static_cast<double>(n - i);
    }
    return acc;
  };
  std::vector<cd> residues(poles.size());
  for (std::size_t i = 0; i < poles.size(); ++i) {
    residues[i] = g.num().eval(poles[i]) / (poles[i] * den_derivative_at(poles[i]));
  }
  cd h0 = g.num().eval(cd(0.0)) / g.den().eval(cd(0.0));
  for (const auto& r : residues) h0 += r;
  h[0] = h0.real();
  std::vector<cd> pole_pow(poles.size(), 1.0);
  for (std::size_t n = 1; n < k; ++n) {
    cd acc = 0.0;
    for (std::size_t i = 0; i < poles.size(); ++i) {
      pole_pow[i] *= poles[i];
      acc += residues[i] * pole_pow[i];
    }
    h[n] = acc.real();
  }
  return h;
}

// Step response of a strictly stable continuous TF with distinct poles, via
// residues of G(s)/s: y(t) = G(0) + sum_i res_i e^{p_i t}.
inline double residue_step_response(const dobsim::TransferFunction& g, double t) {
  const auto poles = g.den().roots();
  auto den_derivative_at = [&](cd s) {
    cd acc = 0.0;
    const auto c = g.den().coeffs();
    const int n = static_cast<int>(c.size()) - 1;
    for (int i = 0; i < n; ++i) {
      acc = acc * s + c[static_cast<std::size_t>(i)] * static_cast<double>(n - i);
    }
    return acc;
  };
  cd y = g.num().eval(cd(0.0)) / g.den().eval(cd(0.0));
  for (const auto& p : poles) {
    const cd res = g.num().eval(p) / (p * den_derivative_at(p));
    y += res * std::exp(p * t);
  }
  return y.real();
}

// Random strictly stable discrete TF with distinct poles away from the unit
// circle, strictly proper.
inline dobsim::TransferFunction random_stable_discrete(std::mt19937& rng, double ts) {
  std::uniform_int_distribution<int> order_dist(2, 5);
  std::uniform_real_distribution<double> mag(0.05, 0.9);
  std::uniform_real_distribution<double> angle(0.1, 3.0);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);

  const int n = order_dist(rng);
  std::vector<cd> poles;
  while (static_cast<int>(poles.size()) < n) {
    if (n - static_cast<int>(poles.size()) >= 2 && coeff(rng) > 0.0) {
      // Angle range keeps the pair well off the real axis, which both
      // separates the conjugates and protects the residue oracle.
      const cd p = std::polar(0.1 + 0.8 * mag(rng), 0.6 + 0.6 * angle(rng));
      poles.push_back(p);
      poles.push_back(std::conj(p));
    } else {
      poles.push_back(cd(coeff(rng) * 0.9, 0.0));
    }
  }
  // Separate real roots pairwise; conjugate pairs stay untouched.
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (poles[i].imag() != 0.0) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (poles[j].imag() == 0.0 && std::abs(poles[i] - poles[j]) < 0.05) {
        poles[i] += cd(poles[i].real() > 0.0 ? -0.07 : 0.07, 0.0);
      }
    }
  }
  const dobsim::Polynomial den = dobsim::Polynomial::from_roots(poles);
  std::vector<double> num(static_cast<std::size_t>(n), 0.0);
  for (double& c : num) c = coeff(rng);
  if (std::abs(num[0]) < 0.1) num[0] = 0.5;
  return dobsim::TransferFunction::discrete(dobsim::Polynomial(std::move(num)), den,
                                            ts);
}

// Random strictly stable continuous TF with distinct real poles.
inline dobsim::TransferFunction random_stable_continuous(std::mt19937& rng) {
  std::uniform_int_distribution<int> order_dist(2, 4);
  std::uniform_real_distribution<double> pole_dist(-8.0, -0.3);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  const int n = order_dist(rng);
  std::vector<cd> poles;
  for (int i = 0; i < n; ++i) {
    double p = pole_dist(rng);
    for (const auto& q : poles) {
      if (std::abs(p - q.real()) < 0.1) p -= 0.55;
    }
    poles.push_back(cd(p, 0.0));
  }
  const dobsim::Polynomial den = dobsim::Polynomial::from_roots(poles);
  std::vector<double> num(static_cast<std::size_t>(n), 0.0);
  for (double& c : num) c = coeff(rng);
  if (std::abs(num.back()) < 0.1) num.back() = 1.0;
  return dobsim::TransferFunction::continuous(dobsim::Polynomial(std::move(num)),
                                              den);
}

}  // namespace oracles
