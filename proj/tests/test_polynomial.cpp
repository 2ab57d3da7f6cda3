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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dobsim/polynomial.hpp"
#include "support/oracles.hpp"

using dobsim::Polynomial;

TEST_CASE("double root of the expanded critically damped pair") {
  const double p = std::exp(-0.02);
  // Expand (z - p)^2 by hand and recover the root.
  const Polynomial poly{1.0, -2.0 * p, p * p};
  const auto roots = poly.roots();
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(std::abs(r - std::complex<double>(p, 0.0)) < 1e-6);
    CHECK(std::abs(r.real() - 0.9802) < 1e-4);
  }
}

TEST_CASE("monomial roots at the origin") {
  const auto roots = Polynomial{1.0, 0.0, 0.0}.roots();
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) CHECK(std::abs(r) < 1e-12);
}

TEST_CASE("plant denominator factor against the quadratic formula") {
  const auto expected = oracles::quadratic_roots(1.242, 933.8, 10610.0);
  auto roots = Polynomial{1.242, 933.8, 10610.0}.roots();
  REQUIRE(roots.size() == 2);
  std::sort(roots.begin(), roots.end(),
            [](auto a, auto b) { return a.real() < b.real(); });
  const double slow = std::max(expected[0].real(), expected[1].real());
  const double fast = std::min(expected[0].real(), expected[1].real());
  CHECK(roots[1].real() == doctest::Approx(slow).epsilon(1e-9));
  CHECK(roots[0].real() == doctest::Approx(fast).epsilon(1e-9));
  CHECK(roots[1].real() == doctest::Approx(-11.53).epsilon(1e-3));
  CHECK(roots[0].real() == doctest::Approx(-740.3).epsilon(1e-3));
}

TEST_CASE("zero polynomial has no roots") {
  CHECK_THROWS_AS((void)Polynomial{}.roots(), std::invalid_argument);
  CHECK(Polynomial{3.0}.roots().empty());
}

TEST_CASE("roots re-expand to the original coefficients") {
  std::mt19937 rng(1234u);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (double& v : c) v = coeff(rng);
    if (std::abs(c[0]) < 0.2) c[0] = 1.0;
    const Polynomial p(c);
    const Polynomial refit = Polynomial::from_roots(p.roots(), p.leading());
    REQUIRE(refit.degree() == p.degree());
    double scale = 0.0;
    for (double v : p.coeffs()) scale = std::max(scale, std::abs(v));
    for (int k = 0; k <= p.degree(); ++k) {
      CHECK(std::abs(refit.coeff_of_power(k) - p.coeff_of_power(k)) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("leading coefficient trimming keeps the polynomial sane") {
  const Polynomial p({0.0, 0.0, 2.0, 1.0});
  CHECK(p.degree() == 1);
  CHECK(p.leading() == 2.0);
  const Polynomial tiny({1e-20, 1.0});  // negligible against 1.0
  CHECK(tiny.degree() == 0);
}

TEST_CASE("arithmetic identities") {
  const Polynomial a{1.0, 2.0, 3.0};
  const Polynomial b{4.0, 5.0};
  CHECK((a + b) - b == a);
  CHECK(a * Polynomial{1.0} == a);
  CHECK((a * b).degree() == 3);
  CHECK((a * Polynomial{}).is_zero());
  const std::complex<double> x(0.3, -1.1);
  const auto lhs = (a * b).eval(x);
  const auto rhs = a.eval(x) * b.eval(x);
  CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
  const auto big = a.eval(std::complex<double>(1e8, 1e8));
  CHECK(std::isfinite(big.real()));
  CHECK(std::isfinite(big.imag()));
  CHECK(a.shifted_up(2).coeff_of_power(2) == 3.0);
}
