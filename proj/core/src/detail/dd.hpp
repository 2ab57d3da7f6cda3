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

// Compensated double-double arithmetic (~31 significant digits). Used to
// evaluate closed-form reference responses whose direct-form realizations
// are too ill-conditioned in plain doubles.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace dobsim::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  dd() = default;
  dd(double h) : hi(h) {}  // NOLINT(google-explicit-constructor)
  dd(double h, double l) : hi(h), lo(l) {}
};

inline dd renorm(double s1, double s2) {
  const double hi = s1 + s2;
  return {hi, s2 - (hi - s1)};
}

inline dd add(dd a, dd b) {
  const double s1 = a.hi + b.hi;
  const double v = s1 - a.hi;
  const double s2 = ((b.hi - v) + (a.hi - (s1 - v))) + a.lo + b.lo;
  return renorm(s1, s2);
}

inline dd neg(dd a) { return {-a.hi, -a.lo}; }

inline dd sub(dd a, dd b) { return add(a, neg(b)); }

inline dd mul(dd a, dd b) {
  const double p1 = a.hi * b.hi;
  const double p2 = std::fma(a.hi, b.hi, -p1) + a.hi * b.lo + a.lo * b.hi;
  return renorm(p1, p2);
}

inline dd div(dd a, dd b) {
  const double q1 = a.hi / b.hi;
  dd r = sub(a, mul(dd(q1), b));
  const double q2 = r.hi / b.hi;
  r = sub(r, mul(dd(q2), b));
  const double q3 = r.hi / b.hi;
  return add(add(dd(q1), dd(q2)), dd(q3));
}

using ddpoly = std::vector<dd>;  // highest degree first

inline ddpoly to_dd(std::span<const double> coeffs) {
  ddpoly out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = dd(coeffs[i]);
  return out;
}

inline ddpoly conv(const ddpoly& a, const ddpoly& b) {
  ddpoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = add(out[i + j], mul(a[i], b[j]));
    }
  }
  return out;
}

inline ddpoly padd(const ddpoly& a, const ddpoly& b) {
  const std::size_t n = std::max(a.size(), b.size());
  ddpoly out(n);
  for (std::size_t i = 0; i < a.size(); ++i) out[n - a.size() + i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[n - b.size() + i] = add(out[n - b.size() + i], b[i]);
  }
  return out;
}

inline ddpoly psub(const ddpoly& a, const ddpoly& b) {
  ddpoly nb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) nb[i] = neg(b[i]);
  return padd(a, nb);
}

inline ddpoly shift_up(const ddpoly& a, int n) {
  ddpoly out = a;
  out.resize(a.size() + static_cast<std::size_t>(n));
  return out;
}

/// Direct-form difference equation of num/den run over `input`, everything
/// in double-double. num must not be longer than den.
inline std::vector<double> filter_response(const ddpoly& num, const ddpoly& den,
                                           std::span<const double> input) {
  const std::size_t n = den.size() - 1;
  ddpoly b(n + 1), a(n + 1);
  for (std::size_t i = 0; i < num.size(); ++i) b[n + 1 - num.size() + i] = num[i];
  for (std::size_t i = 0; i <= n; ++i) a[i] = div(den[i], den[0]);
  for (std::size_t i = 0; i <= n; ++i) b[i] = div(b[i], den[0]);

  std::vector<dd> s(n);
  std::vector<double> out(input.size());
  for (std::size_t k = 0; k < input.size(); ++k) {
    const dd u(input[k]);
    const dd y = n ? add(mul(b[0], u), s[0]) : mul(b[0], u);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      s[i] = add(sub(mul(b[i + 1], u), mul(a[i + 1], y)), s[i + 1]);
    }
    if (n) s[n - 1] = sub(mul(b[n], u), mul(a[n], y));
    out[k] = y.hi + y.lo;
  }
  return out;
}

}  // namespace dobsim::detail
